// Copyright 2026 The bks Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BKS_GF2_HPP
#define BKS_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace bks {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  /// Row r ^= row s.
  void add_row(std::size_t r, std::size_t s);
  void swap_rows(std::size_t r, std::size_t s);

 private:
  std::uint64_t* row(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return words_.data() + r * stride_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

/// Solves A x = b. Free variables are set to 0, so the answer is
/// deterministic. std::nullopt iff the system is inconsistent.
std::optional<std::vector<bool>> solve_gf2(Gf2Matrix a, const std::vector<bool>& b);

}  // namespace bks

#endif  // BKS_GF2_HPP
