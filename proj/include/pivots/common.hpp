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

#ifndef PIVOTS_COMMON_HPP
#define PIVOTS_COMMON_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

namespace pivots {

inline constexpr const char* kToolVersion = "1.0.0";

// A database or file is inconsistent with what the caller asked for.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested computation exceeds the configured size limits.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream of independent seeds derived from one master seed, so work can be
// partitioned across workers without changing the result.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void write_le(std::ostream& out, uint64_t value, int n_bytes) {
  for (int i = 0; i < n_bytes; ++i) {
    out.put(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

inline uint64_t read_le(std::istream& in, int n_bytes) {
  uint64_t value = 0;
  for (int i = 0; i < n_bytes; ++i) {
    int c = in.get();
    if (c == EOF) throw IntegrityError("unexpected end of file");
    value |= static_cast<uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return value;
}

// Shortest decimal form that parses back to the same binary64 value.
std::string format_double(double v);

}  // namespace pivots

#endif  // PIVOTS_COMMON_HPP
