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

#include "bks/ray.hpp"

#include <algorithm>
#include <numeric>

#include "bks/error.hpp"
#include "bks/linalg.hpp"

namespace bks {

namespace {

IntVector canonical_components(IntVector v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
  }
  if (g == 0) {
    throw Error(ErrorKind::ZeroVector, "cannot form a ray from the zero vector");
  }
  Eigen::Index lead = 0;
  while (v(lead) == 0) {
    ++lead;
  }
  if (v(lead) < 0) {
    g = -g;
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_divexact(v(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Ray::Ray(const RationalVector& raw) {
  if (raw.size() == 0) {
    throw Error(ErrorKind::ZeroVector, "empty component list");
  }
  Integer scale = 1;
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), raw(i).get_den_mpz_t());
  }
  IntVector v(raw.size());
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    v(i) = raw(i).get_num() * (scale / raw(i).get_den());
  }
  components_ = canonical_components(std::move(v));
}

Ray::Ray(const IntVector& raw) {
  if (raw.size() == 0) {
    throw Error(ErrorKind::ZeroVector, "empty component list");
  }
  components_ = canonical_components(raw);
}

Ray Ray::of(std::initializer_list<long> components) {
  return Ray(rational_vector(components));
}

std::string Ray::str() const {
  std::string out = "(";
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (i) {
      out += ',';
    }
    out += components_(i).get_str();
  }
  out += ')';
  return out;
}

std::string Ray::text() const {
  std::string out;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (i) {
      out += ' ';
    }
    out += components_(i).get_str();
  }
  return out;
}

bool operator==(const Ray& a, const Ray& b) {
  return a.components_.size() == b.components_.size() && a.components_ == b.components_;
}

std::strong_ordering operator<=>(const Ray& a, const Ray& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) {
    return c;
  }
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    int c = cmp(a.components_(i), b.components_(i));
    if (c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Ray canonicalize(const RationalVector& raw) { return Ray(raw); }

Rational inner(const Ray& a, const Ray& b) {
  require_same_dim(a.dim(), b.dim());
  return Rational(a.components().dot(b.components()));
}

bool orthogonal(const Ray& a, const Ray& b) {
  require_same_dim(a.dim(), b.dim());
  return a.components().dot(b.components()) == 0;
}

bool parallel(const Ray& a, const Ray& b) { return a == b; }

RaySet::RaySet(std::vector<Ray> rays) : rays_(std::move(rays)) {
  if (!rays_.empty()) {
    dim_ = rays_.front().dim();
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].dim() != dim_) {
      throw Error(ErrorKind::MixedDimension, "ray " + rays_[i].str() + " has dimension " +
                                                 std::to_string(rays_[i].dim()) + ", expected " +
                                                 std::to_string(dim_));
    }
    auto [it, inserted] = index_.emplace(rays_[i], static_cast<RayId>(i));
    if (!inserted) {
      throw Error(ErrorKind::DuplicateRay, "ray " + rays_[i].str() + " at positions " +
                                               std::to_string(it->second) + " and " +
                                               std::to_string(i));
    }
  }
}

std::optional<RayId> RaySet::find(const Ray& ray) const {
  auto it = index_.find(ray);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

RaySet RaySet::subset(std::span<const RayId> ids) const {
  std::vector<Ray> picked;
  picked.reserve(ids.size());
  for (RayId id : ids) {
    picked.push_back(rays_.at(id));
  }
  return RaySet(std::move(picked));
}

RaySet RaySet::sorted() const {
  std::vector<Ray> copy = rays_;
  std::sort(copy.begin(), copy.end());
  return RaySet(std::move(copy));
}

bool OrthogonalityGraph::adjacent(RayId a, RayId b) const {
  const auto& row = adjacency.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<std::pair<RayId, RayId>> OrthogonalityGraph::edges() const {
  std::vector<std::pair<RayId, RayId>> out;
  for (RayId i = 0; i < adjacency.size(); ++i) {
    for (RayId j : adjacency[i]) {
      if (i < j) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

OrthogonalityGraph orthogonality_graph(const RaySet& s) {
  OrthogonalityGraph g;
  g.adjacency.resize(s.size());
  for (RayId i = 0; i < s.size(); ++i) {
    for (RayId j = i + 1; j < s.size(); ++j) {
      if (orthogonal(s[i], s[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& row : g.adjacency) {
    std::sort(row.begin(), row.end());
  }
  return g;
}

namespace {

// Extends `clique` with ids from `candidates` (all adjacent to every member and
// larger than the last member) until it has `target` members.
void extend_clique(const OrthogonalityGraph& g, std::size_t target, std::vector<RayId>& clique,
                   const std::vector<RayId>& candidates, std::vector<Basis>& out) {
  if (clique.size() == target) {
    out.push_back(Basis{clique});
    return;
  }
  if (clique.size() + candidates.size() < target) {
    return;
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    RayId v = candidates[k];
    std::vector<RayId> next;
    const auto& row = g.adjacency[v];
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                          candidates.end(), row.begin(), row.end(), std::back_inserter(next));
    clique.push_back(v);
    extend_clique(g, target, clique, next, out);
    clique.pop_back();
  }
}

}  // namespace

std::vector<Basis> enumerate_bases(const RaySet& s) {
  std::vector<Basis> out;
  if (s.empty()) {
    return out;
  }
  const auto g = orthogonality_graph(s);
  std::vector<RayId> all(s.size());
  std::iota(all.begin(), all.end(), RayId{0});
  std::vector<RayId> clique;
  extend_clique(g, static_cast<std::size_t>(s.dim()), clique, all, out);
  return out;
}

bool in_span(const Ray& target, std::span<const Ray> generators) {
  IntMatrix g(target.dim(), static_cast<Eigen::Index>(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    require_same_dim(target.dim(), generators[k].dim());
    g.col(static_cast<Eigen::Index>(k)) = generators[k].components();
  }
  return in_column_span(target.components(), g);
}

Ray tensor(const Ray& a, const Ray& b) {
  require_same_dim(a.dim(), 2);
  require_same_dim(b.dim(), 2);
  IntVector v(4);
  v << a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1];
  return Ray(v);
}

std::optional<Factorization> factorize(const Ray& u) {
  require_same_dim(u.dim(), 4);
  if (u[0] * u[3] - u[1] * u[2] != 0) {
    return std::nullopt;
  }
  // Reshape rows index the first qubit: u = a b^T.
  IntVector row(2), col(2);
  if (u[0] != 0 || u[1] != 0) {
    row << u[0], u[1];
  } else {
    row << u[2], u[3];
  }
  if (u[0] != 0 || u[2] != 0) {
    col << u[0], u[2];
  } else {
    col << u[1], u[3];
  }
  return Factorization{Ray(col), Ray(row)};
}

SignedPermutation SignedPermutation::identity(int dim) {
  SignedPermutation p;
  p.permutation.resize(static_cast<std::size_t>(dim));
  std::iota(p.permutation.begin(), p.permutation.end(), 0);
  p.signs.assign(static_cast<std::size_t>(dim), 1);
  return p;
}

Ray apply_symmetry(const SignedPermutation& p, const Ray& ray) {
  require_same_dim(p.dim(), ray.dim());
  IntVector v(ray.dim());
  for (int j = 0; j < p.dim(); ++j) {
    v(j) = p.signs[static_cast<std::size_t>(j)] * ray[p.permutation[static_cast<std::size_t>(j)]];
  }
  return Ray(v);
}

RaySet apply_symmetry(const SignedPermutation& p, const RaySet& set) {
  std::vector<Ray> mapped;
  mapped.reserve(set.size());
  for (const Ray& r : set) {
    mapped.push_back(apply_symmetry(p, r));
  }
  return RaySet(std::move(mapped));
}

std::vector<SignedPermutation> signed_permutations(int dim) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      SignedPermutation p;
      p.permutation = perm;
      p.signs.resize(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        p.signs[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<SignedPermutation> find_symmetry(const Ray& from, const Ray& to) {
  require_same_dim(from.dim(), to.dim());
  for (auto& p : signed_permutations(static_cast<int>(from.dim()))) {
    if (apply_symmetry(p, from) == to) {
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace bks
