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

#ifndef BKS_LINALG_HPP
#define BKS_LINALG_HPP

#include <Eigen/Core>

#include "bks/scalar.hpp"

namespace bks {

/// Rank by fraction-free row elimination. Works for any exact ring scalar
/// (Integer, Rational); never divides, so integer inputs stay integers.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
    }
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) {
        continue;
      }
      const Scalar p = a(rank, col);
      const Scalar q = a(r, col);
      a.row(r) = (p * a.row(r) - q * a.row(rank)).eval();
    }
    ++rank;
  }
  return rank;
}

/// True iff `target` is a linear combination of the columns of `generators`.
template <typename DerivedT, typename DerivedG>
bool in_column_span(const Eigen::MatrixBase<DerivedT>& target,
                    const Eigen::MatrixBase<DerivedG>& generators) {
  using Scalar = typename DerivedG::Scalar;
  if (generators.cols() == 0) {
    return (target.array() == Scalar(0)).all();
  }
  Matrix<Scalar> augmented(generators.rows(), generators.cols() + 1);
  augmented.leftCols(generators.cols()) = generators;
  augmented.col(generators.cols()) = target;
  return exact_rank(augmented) == exact_rank(generators);
}

/// Rank-one projector u u^T / (u^T u).
template <typename Derived>
RationalMatrix projector(const Eigen::MatrixBase<Derived>& u) {
  RationalVector q = u.template cast<Rational>();
  const Rational norm = q.squaredNorm();
  RationalMatrix p = q * q.transpose();
  p /= norm;
  return p;
}

}  // namespace bks

#endif  // BKS_LINALG_HPP
