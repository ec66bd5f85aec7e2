// Copyright 2026 the pivots authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pivots/bitmatrix.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "pivots/common.hpp"

namespace pivots {

namespace {

constexpr uint64_t kColumn0 = 0x0101010101010101ull;

uint64_t window_mask(int n_rows, int n_cols) {
  if (n_rows == 0 || n_cols == 0) return 0;
  uint64_t rows = n_rows == 8 ? kColumn0 : kColumn0 & ((1ull << (8 * n_rows)) - 1);
  uint64_t row = n_cols == 8 ? 0xff : (1ull << n_cols) - 1;
  return rows * row;
}

void check_dim(int n_rows, int n_cols) {
  if (n_rows < 0 || n_rows > kMaxDim || n_cols < 0 || n_cols > kMaxDim) {
    throw std::invalid_argument("matrix dimensions must be between 0 and 8");
  }
}

void check_pivot(const BitMatrix& m, Pivot p) {
  if (p.row >= m.n_rows() || p.col >= m.n_cols()) {
    throw std::invalid_argument("pivot position out of range");
  }
  if (!m.get(p.row, p.col)) {
    throw std::invalid_argument("pivot must sit on a nonzero entry");
  }
}

}  // namespace

BitMatrix::BitMatrix(int n_rows, int n_cols, uint64_t bits)
    : n_rows_(static_cast<uint8_t>(n_rows)),
      n_cols_(static_cast<uint8_t>(n_cols)),
      bits_(bits) {
  check_dim(n_rows, n_cols);
  if ((bits & ~window_mask(n_rows, n_cols)) != 0) {
    throw std::invalid_argument("bits outside the matrix window must be zero");
  }
}

BitMatrix BitMatrix::full(int n_rows, int n_cols) {
  check_dim(n_rows, n_cols);
  return {n_rows, n_cols, window_mask(n_rows, n_cols)};
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<uint8_t> rows;
  size_t width = 0;
  uint8_t current = 0;
  size_t len = 0;
  bool in_row = false;
  auto flush = [&] {
    if (!in_row) return;
    if (len == 0 || len > static_cast<size_t>(kMaxDim)) {
      throw std::invalid_argument("row length must be between 1 and 8");
    }
    if (width == 0) {
      width = len;
    } else if (len != width) {
      throw std::invalid_argument("all rows must have the same length");
    }
    rows.push_back(current);
    current = 0;
    len = 0;
    in_row = false;
  };
  for (char c : text) {
    switch (c) {
      case '0':
      case '.':
        in_row = true;
        ++len;
        break;
      case '1':
      case '*':
        in_row = true;
        current |= static_cast<uint8_t>(1u << len);
        ++len;
        break;
      case '/':
      case '\n':
        flush();
        break;
      case ' ':
      case '\t':
      case '\r':
        break;
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in matrix pattern");
    }
  }
  flush();
  if (rows.empty()) throw std::invalid_argument("empty matrix pattern");
  if (rows.size() > static_cast<size_t>(kMaxDim)) {
    throw std::invalid_argument("at most 8 rows are supported");
  }
  uint64_t bits = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    bits |= static_cast<uint64_t>(rows[i]) << (8 * i);
  }
  return {static_cast<int>(rows.size()), static_cast<int>(width), bits};
}

bool BitMatrix::get(int i, int j) const {
  return (bits_ >> (8 * i + j)) & 1u;
}

BitMatrix BitMatrix::with(int i, int j, bool value) const {
  if (i < 0 || i >= n_rows_ || j < 0 || j >= n_cols_) {
    throw std::invalid_argument("entry position out of range");
  }
  uint64_t bit = 1ull << (8 * i + j);
  return {n_rows_, n_cols_, value ? (bits_ | bit) : (bits_ & ~bit)};
}

uint8_t BitMatrix::row_word(int i) const {
  return static_cast<uint8_t>(bits_ >> (8 * i));
}

uint8_t BitMatrix::col_word(int j) const {
  // Gather bit j of every byte into the low byte.
  uint64_t x = (bits_ >> j) & kColumn0;
  return static_cast<uint8_t>((x * 0x0102040810204080ull) >> 56);
}

int BitMatrix::col_count(int j) const {
  return std::popcount(bits_ & (kColumn0 << j));
}

BitMatrix BitMatrix::padded(int n_rows, int n_cols) const {
  if (n_rows < n_rows_ || n_cols < n_cols_) {
    throw std::invalid_argument("padding cannot shrink the matrix");
  }
  return {n_rows, n_cols, bits_};
}

BitMatrix BitMatrix::padded_square() const {
  int n = n_rows_ > n_cols_ ? n_rows_ : n_cols_;
  return {n, n, bits_};
}

std::string BitMatrix::to_string(char zero, char one, char sep) const {
  std::string out;
  for (int i = 0; i < n_rows_; ++i) {
    if (i > 0) out.push_back(sep);
    for (int j = 0; j < n_cols_; ++j) {
      out.push_back(get(i, j) ? one : zero);
    }
  }
  return out;
}

Profile profile(const BitMatrix& m) {
  Profile p;
  p.row_counts.reserve(m.n_rows());
  p.col_counts.reserve(m.n_cols());
  for (int i = 0; i < m.n_rows(); ++i) p.row_counts.push_back(m.row_count(i));
  for (int j = 0; j < m.n_cols(); ++j) p.col_counts.push_back(m.col_count(j));
  return p;
}

int fill_in(const BitMatrix& m, Pivot p) {
  check_pivot(m, p);
  return (m.row_count(p.row) - 1) * (m.col_count(p.col) - 1);
}

bool is_free_pivot(const BitMatrix& m, Pivot p) {
  check_pivot(m, p);
  return m.row_count(p.row) == 1 || m.col_count(p.col) == 1;
}

int step_cost(const BitMatrix& m, Pivot p, CostModel model) {
  check_pivot(m, p);
  int r = m.row_count(p.row);
  int c = m.col_count(p.col);
  if (r == 1 || c == 1) return 0;  // free pivot, nothing to update
  uint8_t pivot_row_rest = m.row_word(p.row) & ~static_cast<uint8_t>(1u << p.col);
  int clashes = 0;
  int ring_scalings = 0;
  for (int k = 0; k < m.n_rows(); ++k) {
    if (k == p.row || !m.get(k, p.col)) continue;
    clashes += std::popcount(static_cast<unsigned>(m.row_word(k) & pivot_row_rest));
    ring_scalings += m.row_count(k) - 1;
  }
  int products = (r - 1) * (c - 1);
  if (model == CostModel::Field) {
    return (c - 1) + products + clashes;
  }
  return ring_scalings + products + clashes;
}

BitMatrix eliminate(const BitMatrix& m, Pivot p) {
  check_pivot(m, p);
  uint8_t pivot_row_rest = m.row_word(p.row) & ~static_cast<uint8_t>(1u << p.col);
  uint8_t low = static_cast<uint8_t>((1u << p.col) - 1);
  uint64_t bits = 0;
  int out_row = 0;
  for (int k = 0; k < m.n_rows(); ++k) {
    if (k == p.row) continue;
    uint8_t row = m.row_word(k);
    if ((row >> p.col) & 1u) row |= pivot_row_rest;
    row = static_cast<uint8_t>((row & low) | ((row >> (p.col + 1)) << p.col));
    bits |= static_cast<uint64_t>(row) << (8 * out_row);
    ++out_row;
  }
  return {m.n_rows() - 1, m.n_cols() - 1, bits};
}

std::vector<Pivot> min_fill_in_pivots(const BitMatrix& m) {
  std::vector<Pivot> best;
  int best_fill = -1;
  for (int i = 0; i < m.n_rows(); ++i) {
    for (int j = 0; j < m.n_cols(); ++j) {
      if (!m.get(i, j)) continue;
      int fill = (m.row_count(i) - 1) * (m.col_count(j) - 1);
      if (best_fill < 0 || fill < best_fill) {
        best_fill = fill;
        best.clear();
      }
      if (fill == best_fill) {
        best.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
      }
    }
  }
  return best;
}

std::vector<Pivot> nonzero_positions(const BitMatrix& m) {
  std::vector<Pivot> out;
  out.reserve(static_cast<size_t>(m.popcount()));
  for (int i = 0; i < m.n_rows(); ++i) {
    for (int j = 0; j < m.n_cols(); ++j) {
      if (m.get(i, j)) out.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
    }
  }
  return out;
}

double density(const BitMatrix& m) {
  if (m.empty()) return 0.0;
  return static_cast<double>(m.popcount()) / (m.n_rows() * m.n_cols());
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace pivots
