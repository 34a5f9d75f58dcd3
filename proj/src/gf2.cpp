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

#include "bks/gf2.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace bks {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  assert(r < rows_ && c < cols_);
  return (row(r)[c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  assert(r < rows_ && c < cols_);
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= bit;
  } else {
    row(r)[c / 64] &= ~bit;
  }
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  assert(r < rows_ && c < cols_);
  row(r)[c / 64] ^= std::uint64_t{1} << (c % 64);
}

void Gf2Matrix::add_row(std::size_t r, std::size_t s) {
  std::uint64_t* dst = row(r);
  const std::uint64_t* src = row(s);
  for (std::size_t w = 0; w < stride_; ++w) {
    dst[w] ^= src[w];
  }
}

void Gf2Matrix::swap_rows(std::size_t r, std::size_t s) {
  if (r == s) {
    return;
  }
  std::uint64_t* a = row(r);
  std::uint64_t* b = row(s);
  for (std::size_t w = 0; w < stride_; ++w) {
    std::swap(a[w], b[w]);
  }
}

std::optional<std::vector<bool>> solve_gf2(Gf2Matrix a, const std::vector<bool>& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_gf2: right-hand side has wrong length");
  }
  // Work on [A | b].
  const std::size_t n = a.cols();
  Gf2Matrix m(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a.get(r, c)) {
        m.set(r, c, true);
      }
    }
    m.set(r, n, b[r]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && !m.get(p, c)) {
      ++p;
    }
    if (p == m.rows()) {
      continue;
    }
    m.swap_rows(p, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m.get(r, c)) {
        m.add_row(r, rank);
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < m.rows(); ++r) {
    if (m.get(r, n)) {
      return std::nullopt;
    }
  }
  std::vector<bool> x(n, false);
  for (std::size_t r = 0; r < rank; ++r) {
    x[pivot_col[r]] = m.get(r, n);
  }
  return x;
}

}  // namespace bks
