#pragma once

#include <map>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/roots.hpp"

namespace toric {

// finite rational linear combination of lattice monomials chi^m; the zero
// function is the empty sum
class MonomialFunction {
 public:
  MonomialFunction() = default;
  static MonomialFunction monomial(const Vec& m, const Rat& c = Rat(1));

  const std::map<Vec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MonomialFunction operator+(const MonomialFunction& o) const;
  MonomialFunction operator*(const MonomialFunction& o) const;
  MonomialFunction scaled(const Rat& c) const;
  bool operator==(const MonomialFunction& o) const { return terms_ == o.terms_; }

 private:
  std::map<Vec, Rat> terms_;
};

// the homogeneous derivation of a root: chi^m -> <m, v_ray> chi^{m+e}.
// Locally nilpotent on the coordinate ring; its kernel is exactly the span of
// the ray-invariant monomials.
MonomialFunction lnd_apply(const Cone& sigma, const DemazureRoot& root,
                           const MonomialFunction& g);

// exp(f * lnd) for an invariant f: the replica of the root subgroup with
// parameter function f.  f must be supported in the dual cone and pair to
// zero with the root's ray.
class ReplicaAutomorphism {
 public:
  ReplicaAutomorphism(Cone sigma, DemazureRoot root, MonomialFunction f);

  const Cone& cone() const { return cone_; }
  const Cone& dual_cone() const { return dual_; }
  const DemazureRoot& root() const { return root_; }
  const MonomialFunction& invariant() const { return f_; }

  MonomialFunction apply(const MonomialFunction& g) const;
  ReplicaAutomorphism inverse() const;

 private:
  Cone cone_, dual_;
  DemazureRoot root_;
  MonomialFunction f_;
};

// equality of compositions in both orders on the weight-monoid generators
bool replica_commutes(const ReplicaAutomorphism& a, const ReplicaAutomorphism& b);

// the algebra automorphism of a torus element: chi^m -> t^m chi^m
MonomialFunction torus_scale(const std::vector<Rat>& t, const MonomialFunction& g);

// conjugate replica: t o r o t^{-1}, again a replica of the same root with
// each term chi^u of f rescaled by t^{u+e}
ReplicaAutomorphism torus_conjugate(const std::vector<Rat>& t, const ReplicaAutomorphism& r);

// desk-scale certificate for the dense-orbit argument: the kernel torus of
// the root weight is connected, and the root weight together with the
// ray-invariant characters spans the full character lattice
struct DuOrbitReport {
  QuotientStructure kernel;
  bool kernel_connected = false;
  bool span_is_full = false;
  bool pass = false;
};
DuOrbitReport du_orbit_certificate(const Cone& sigma, const DemazureRoot& root);

}  // namespace toric
