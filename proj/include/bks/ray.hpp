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

#ifndef BKS_RAY_HPP
#define BKS_RAY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bks/scalar.hpp"

namespace bks {

using RayId = std::uint32_t;

/// A projective direction in rational d-space.
///
/// Stored in canonical form: coprime integer components whose first nonzero
/// entry is positive. Two rays are the same direction iff their components
/// compare equal, so equality and ordering are plain lexicographic compares.
class Ray {
 public:
  /// Canonicalizes `raw`. Throws Error(ZeroVector) if every entry is zero.
  explicit Ray(const RationalVector& raw);
  explicit Ray(const IntVector& raw);

  static Ray of(std::initializer_list<long> components);

  Eigen::Index dim() const { return components_.size(); }
  const IntVector& components() const { return components_; }
  const Integer& operator[](Eigen::Index i) const { return components_(i); }
  RationalVector to_rational() const { return components_.cast<Rational>(); }

  /// "(1,-1,0,0)"
  std::string str() const;
  /// "1 -1 0 0", the ray-set file form.
  std::string text() const;

  friend bool operator==(const Ray& a, const Ray& b);
  friend std::strong_ordering operator<=>(const Ray& a, const Ray& b);

 private:
  IntVector components_;
};

Ray canonicalize(const RationalVector& raw);

/// Exact Euclidean inner product. Throws DimensionMismatch.
Rational inner(const Ray& a, const Ray& b);
bool orthogonal(const Ray& a, const Ray& b);
bool parallel(const Ray& a, const Ray& b);

/// An ordered collection of distinct rays of one dimension; a ray's id is its
/// position.
class RaySet {
 public:
  RaySet() = default;
  /// Throws DuplicateRay or MixedDimension.
  explicit RaySet(std::vector<Ray> rays);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return rays_.size(); }
  bool empty() const { return rays_.empty(); }
  const Ray& operator[](RayId id) const { return rays_.at(id); }
  const std::vector<Ray>& rays() const { return rays_; }
  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }

  std::optional<RayId> find(const Ray& ray) const;
  bool contains(const Ray& ray) const { return find(ray).has_value(); }

  /// New set holding the given rays in the given order.
  RaySet subset(std::span<const RayId> ids) const;
  /// Same rays, sorted canonically.
  RaySet sorted() const;

  friend bool operator==(const RaySet& a, const RaySet& b) { return a.rays_ == b.rays_; }

 private:
  Eigen::Index dim_ = 0;
  std::vector<Ray> rays_;
  std::map<Ray, RayId> index_;
};

/// Ids of `dim` mutually orthogonal rays, sorted ascending.
struct Basis {
  std::vector<RayId> ray_ids;

  friend auto operator<=>(const Basis&, const Basis&) = default;
};

/// Edge (i, j), i < j, iff rays i and j are orthogonal.
struct OrthogonalityGraph {
  std::vector<std::vector<RayId>> adjacency;

  std::size_t degree(RayId id) const { return adjacency.at(id).size(); }
  bool adjacent(RayId a, RayId b) const;
  std::vector<std::pair<RayId, RayId>> edges() const;
};

OrthogonalityGraph orthogonality_graph(const RaySet& s);

/// All complete orthogonal bases (dim-cliques of the orthogonality graph),
/// each once, sorted lexicographically by id tuple.
std::vector<Basis> enumerate_bases(const RaySet& s);

/// True iff `target` is a rational combination of `generators`.
bool in_span(const Ray& target, std::span<const Ray> generators);

/// Kronecker product of two qubit rays in the order |++>,|+->,|-+>,|-->.
Ray tensor(const Ray& a, const Ray& b);

struct Factorization {
  Ray first;
  Ray second;
};

/// Splits a 4-dim ray into qubit factors when its 2x2 reshape has rank one;
/// std::nullopt means entangled.
std::optional<Factorization> factorize(const Ray& u);

/// Coordinate permutation with sign flips: image[j] = signs[j] * x[permutation[j]].
struct SignedPermutation {
  std::vector<int> permutation;
  std::vector<int> signs;

  static SignedPermutation identity(int dim);
  int dim() const { return static_cast<int>(permutation.size()); }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

Ray apply_symmetry(const SignedPermutation& p, const Ray& ray);
/// Maps every ray; ids are preserved.
RaySet apply_symmetry(const SignedPermutation& p, const RaySet& set);

/// All 2^d d! signed permutations in a fixed order.
std::vector<SignedPermutation> signed_permutations(int dim);

/// First signed permutation (in signed_permutations order) taking `from` to `to`.
std::optional<SignedPermutation> find_symmetry(const Ray& from, const Ray& to);

}  // namespace bks

#endif  // BKS_RAY_HPP
