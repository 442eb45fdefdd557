#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

// Unique minimal generating set of C intersect Z^n, lex-sorted.  C must be
// strongly convex; a cone with lineality is rejected (split off the torus
// factor first).
std::vector<Vec> hilbert_basis(const Cone& c);

// The monoid of lattice points of a cone sitting in the character lattice.
// Not restricted to pointed cones: with lineality present the lattice points
// form a group along those directions and generators() covers both signs.
class AffineMonoid {
 public:
  explicit AffineMonoid(Cone cone) : cone_(std::move(cone)) {}

  const Cone& cone() const { return cone_; }
  std::size_t ambient_rank() const { return cone_.ambient_rank(); }

  // the lattice points form a group, i.e. the cone is a linear subspace
  bool is_group() const { return cone_.rays().empty(); }

  // pointed cones only (throws LINEALITY otherwise), cached after first use
  const std::vector<Vec>& hilbert_basis() const;

  // monoid generating set, lex-sorted: the Hilbert basis when pointed;
  // otherwise canonical lifts of the pointed-quotient Hilbert basis plus
  // +/- each lineality basis vector
  std::vector<Vec> generators() const;

  bool contains(const Vec& m) const;

  // one greedy-lex decomposition of m over the Hilbert basis, as
  // (element, multiplicity) pairs sorted by element; nullopt when m is not a
  // member.  Pointed cones only.
  std::optional<std::vector<std::pair<Vec, Int>>> decompose(const Vec& m) const;

 private:
  Cone cone_;
  mutable std::optional<std::vector<Vec>> hb_;
};

// sigma-dual intersect ray-perp: the characters fixed by the root subgroup
// attached to the extremal ray.  Index into sigma.rays().
AffineMonoid invariant_subalgebra(const Cone& sigma, std::size_t ray_index);

// monoid of the dual cone (the character monoid of the affine variety of
// sigma); for sigma = {0} this is the full lattice and is_group() holds
AffineMonoid weight_monoid(const Cone& sigma);

}  // namespace toric
