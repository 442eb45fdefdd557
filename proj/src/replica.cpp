#include "toric/replica.hpp"

#include <stdexcept>
#include <utility>

#include "toric/error.hpp"
#include "toric/monoid.hpp"

namespace toric {

namespace {

Rat rat_pow(const Rat& base, const Int& e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw DomainError("ZERO_CHARACTER", "zero raised to a negative power");
  Int a = abs(e);
  if (!a.fits_ulong_p()) throw std::overflow_error("exponent out of range");
  unsigned long ul = a.get_ui();
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ul);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ul);
  if (e < 0) std::swap(num, den);
  return Rat(num) / Rat(den);
}

Rat character_value(const std::vector<Rat>& t, const Vec& m) {
  Rat out(1);
  for (std::size_t i = 0; i < m.size(); ++i) out *= rat_pow(t[i], m[i]);
  return out;
}

Int binomial(const Int& p, unsigned long k) {
  Int b;
  mpz_bin_ui(b.get_mpz_t(), p.get_mpz_t(), k);
  return b;
}

void check_character(const std::vector<Rat>& t, std::size_t n) {
  if (t.size() != n)
    throw DomainError("DIMENSION", "torus element has the wrong number of coordinates");
  for (const Rat& x : t)
    if (x == 0) throw DomainError("ZERO_CHARACTER", "torus coordinates must be nonzero");
}

}  // namespace

MonomialFunction MonomialFunction::monomial(const Vec& m, const Rat& c) {
  MonomialFunction f;
  if (c != 0) f.terms_[m] = c;
  return f;
}

MonomialFunction MonomialFunction::operator+(const MonomialFunction& o) const {
  MonomialFunction out(*this);
  for (const auto& [m, c] : o.terms_) {
    Rat& slot = out.terms_[m];
    slot += c;
    if (slot == 0) out.terms_.erase(m);
  }
  return out;
}

MonomialFunction MonomialFunction::operator*(const MonomialFunction& o) const {
  MonomialFunction out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Vec m = add(m1, m2);
      Rat& slot = out.terms_[m];
      slot += c1 * c2;
      if (slot == 0) out.terms_.erase(m);
    }
  return out;
}

MonomialFunction MonomialFunction::scaled(const Rat& c) const {
  MonomialFunction out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
  return out;
}

MonomialFunction lnd_apply(const Cone& sigma, const DemazureRoot& root,
                           const MonomialFunction& g) {
  if (!is_root(sigma, root.ray_index, root.weight))
    throw DomainError("NOT_A_ROOT", "weight is not a root for the given ray");
  Cone dual = sigma.dual();
  const Vec& v = sigma.rays()[root.ray_index];
  MonomialFunction out;
  for (const auto& [m, c] : g.terms()) {
    if (!dual.contains(m))
      throw DomainError("SUPPORT", "function has a monomial outside the weight monoid");
    Int p = dot(m, v);
    if (p == 0) continue;
    out = out + MonomialFunction::monomial(add(m, root.weight), c * Rat(p));
  }
  for (const auto& [m, c] : out.terms())
    if (!dual.contains(m))
      throw std::logic_error("derivation image left the coordinate ring");
  return out;
}

ReplicaAutomorphism::ReplicaAutomorphism(Cone sigma, DemazureRoot root, MonomialFunction f)
    : cone_(std::move(sigma)), dual_(cone_.dual()), root_(std::move(root)), f_(std::move(f)) {
  if (!cone_.is_strongly_convex())
    throw DomainError("LINEALITY", "replicas live on strongly convex cones");
  if (!is_root(cone_, root_.ray_index, root_.weight))
    throw DomainError("NOT_A_ROOT", "weight is not a root for the given ray");
  const Vec& v = cone_.rays()[root_.ray_index];
  for (const auto& [m, c] : f_.terms()) {
    if (!dual_.contains(m) || dot(m, v) != 0)
      throw DomainError("NOT_INVARIANT",
                        "replica parameter must be a ray-invariant regular function");
  }
}

MonomialFunction ReplicaAutomorphism::apply(const MonomialFunction& g) const {
  std::size_t n = cone_.ambient_rank();
  const Vec& v = cone_.rays()[root_.ray_index];
  MonomialFunction out;
  for (const auto& [m, c] : g.terms()) {
    if (!dual_.contains(m))
      throw DomainError("SUPPORT", "function has a monomial outside the weight monoid");
    // exp(f d)(chi^m) = sum_k C(p,k) f^k chi^{m+ke}, p = <m, v>; the series
    // stops at k = p because d^k chi^m carries the falling factorial of p
    Int p = dot(m, v);
    MonomialFunction acc = MonomialFunction::monomial(m, c);
    MonomialFunction fpow = MonomialFunction::monomial(Vec(n, 0));
    Vec shifted = m;
    for (unsigned long k = 1; Int(k) <= p; ++k) {
      fpow = fpow * f_;
      if (fpow.is_zero()) break;
      shifted = add(shifted, root_.weight);
      acc = acc + (fpow * MonomialFunction::monomial(shifted, c * Rat(binomial(p, k))));
    }
    out = out + acc;
  }
  for (const auto& [m, c] : out.terms())
    if (!dual_.contains(m))
      throw std::logic_error("replica image left the coordinate ring");
  return out;
}

ReplicaAutomorphism ReplicaAutomorphism::inverse() const {
  return ReplicaAutomorphism(cone_, root_, f_.scaled(Rat(-1)));
}

bool replica_commutes(const ReplicaAutomorphism& a, const ReplicaAutomorphism& b) {
  if (!(a.cone() == b.cone()))
    throw DomainError("MISMATCHED_CONES", "replicas act on different varieties");
  AffineMonoid weights = weight_monoid(a.cone());
  for (const Vec& h : weights.generators()) {
    MonomialFunction chi = MonomialFunction::monomial(h);
    if (!(a.apply(b.apply(chi)) == b.apply(a.apply(chi)))) return false;
  }
  return true;
}

MonomialFunction torus_scale(const std::vector<Rat>& t, const MonomialFunction& g) {
  MonomialFunction out;
  for (const auto& [m, c] : g.terms()) {
    check_character(t, m.size());
    out = out + MonomialFunction::monomial(m, c * character_value(t, m));
  }
  return out;
}

ReplicaAutomorphism torus_conjugate(const std::vector<Rat>& t, const ReplicaAutomorphism& r) {
  check_character(t, r.cone().ambient_rank());
  Rat at_e = character_value(t, r.root().weight);
  MonomialFunction conj_f = torus_scale(t, r.invariant()).scaled(at_e);
  return ReplicaAutomorphism(r.cone(), r.root(), conj_f);
}

DuOrbitReport du_orbit_certificate(const Cone& sigma, const DemazureRoot& root) {
  if (!sigma.is_full_dimensional())
    throw DomainError("DIMENSION", "dense-orbit certificate needs a full-dimensional cone");
  if (!is_root(sigma, root.ray_index, root.weight))
    throw DomainError("NOT_A_ROOT", "weight is not a root for the given ray");
  std::size_t n = sigma.ambient_rank();

  DuOrbitReport report;
  report.kernel = root_kernel(root.weight, n);
  report.kernel_connected = report.kernel.invariant_factors.empty();

  AffineMonoid slice = invariant_subalgebra(sigma, root.ray_index);
  std::vector<Vec> span = slice.hilbert_basis();
  span.push_back(root.weight);
  QuotientStructure q = quotient_structure(n, span);
  report.span_is_full = q.free_rank == 0 && q.invariant_factors.empty();

  report.pass = report.kernel_connected && report.span_is_full;
  return report;
}

}  // namespace toric
