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

#ifndef PIVOTS_BITMATRIX_HPP
#define PIVOTS_BITMATRIX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pivots {

inline constexpr int kMaxDim = 8;

// The two-element coefficient domain {0, *}: addition never cancels,
// multiplication is absorbing.
constexpr bool semiring_add(bool x, bool y) { return x || y; }
constexpr bool semiring_mul(bool x, bool y) { return x && y; }

enum class CostModel : uint8_t { Field = 0, Ring = 1 };

inline const char* to_string(CostModel m) {
  return m == CostModel::Field ? "field" : "ring";
}

struct Pivot {
  uint8_t row = 0;
  uint8_t col = 0;
  friend constexpr auto operator<=>(const Pivot&, const Pivot&) = default;
};

// A zero/nonzero pattern of size up to 8x8 packed into one 64-bit word:
// bit (8*i + j) is set iff entry (i, j) is nonzero. Bits outside the
// window are always zero. The 0x0 matrix is a legal terminal value.
// Instances are immutable; all operations below are pure.
class BitMatrix {
 public:
  constexpr BitMatrix() = default;
  BitMatrix(int n_rows, int n_cols, uint64_t bits = 0);

  static BitMatrix zero(int n_rows, int n_cols) { return {n_rows, n_cols, 0}; }
  static BitMatrix full(int n_rows, int n_cols);

  // Rows separated by '/' or newlines; '0'/'.' for zero, '1'/'*' for
  // nonzero, e.g. "110/011/111".
  static BitMatrix parse(std::string_view text);

  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }
  uint64_t bits() const { return bits_; }

  bool empty() const { return n_rows_ == 0 || n_cols_ == 0; }
  bool is_zero() const { return bits_ == 0; }
  bool square() const { return n_rows_ == n_cols_; }
  int popcount() const { return std::popcount(bits_); }

  bool get(int i, int j) const;
  BitMatrix with(int i, int j, bool value) const;

  // Row i as an n_cols-bit word, column j in bit j.
  uint8_t row_word(int i) const;
  // Column j as an n_rows-bit word, row i in bit i.
  uint8_t col_word(int j) const;

  int row_count(int i) const { return std::popcount(row_word(i)); }
  int col_count(int j) const;

  // Top-left embedding into a larger window (padding bits stay zero).
  BitMatrix padded(int n_rows, int n_cols) const;
  // Pads the short dimension with zero rows/columns.
  BitMatrix padded_square() const;

  std::string to_string(char zero = '0', char one = '1', char sep = '/') const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  uint8_t n_rows_ = 0;
  uint8_t n_cols_ = 0;
  uint64_t bits_ = 0;
};

struct Profile {
  std::vector<int> row_counts;
  std::vector<int> col_counts;
};

Profile profile(const BitMatrix& m);

// (r-1)(c-1) for the pivot's row and column counts. The pivot must sit on
// a nonzero entry.
int fill_in(const BitMatrix& m, Pivot p);

// True iff the pivot's row or column holds no other nonzero entry;
// eliminating with it costs nothing.
bool is_free_pivot(const BitMatrix& m, Pivot p);

// Operation count of one elimination step with the given pivot. Free
// pivots cost 0 in both models.
int step_cost(const BitMatrix& m, Pivot p, CostModel model);

// One step of Gaussian elimination on the pattern: rows with a nonzero in
// the pivot column absorb the pivot row (union, no cancellation), then the
// pivot row and column are removed. Result is (n-1)x(m-1).
BitMatrix eliminate(const BitMatrix& m, Pivot p);

// All nonzero positions achieving minimal fill-in, in row-major order.
// Empty for the zero matrix.
std::vector<Pivot> min_fill_in_pivots(const BitMatrix& m);

// All nonzero positions in row-major order.
std::vector<Pivot> nonzero_positions(const BitMatrix& m);

double density(const BitMatrix& m);

}  // namespace pivots

#endif  // PIVOTS_BITMATRIX_HPP
