#include "toric/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toric/monoid.hpp"

namespace toric {

namespace {

Vec apply_map(const Mat& g, const Vec& v) {
  Vec out(g.cols(), 0);
  for (std::size_t j = 0; j < g.cols(); ++j)
    for (std::size_t i = 0; i < g.rows(); ++i) out[j] += v[i] * g(i, j);
  return out;
}

// adapted coordinates for a cone: rows of `basis` are a lineality basis,
// then a complement inside the saturated span, then an ambient complement.
// In these coordinates the pointed quotient of the cone lives in the middle
// block.
struct SplitCone {
  std::size_t lin_rank = 0;
  std::size_t pointed_dim = 0;
  Mat basis = Mat(0, 0);
  Mat basis_inv = Mat(0, 0);
  std::vector<Vec> pointed_rays;
};

SplitCone split_cone(const Cone& c) {
  std::size_t n = c.ambient_rank();
  std::vector<Vec> span_gens = c.generators();
  SpanBasis outer = span_lattice_basis(n, span_gens);
  std::size_t d = outer.sat.size();

  std::vector<Vec> lin_coords;
  for (const Vec& l : c.lineality())
    lin_coords.push_back(*coordinates_in_hermite_basis(outer.sat, l));
  SpanBasis inner = span_lattice_basis(d, lin_coords);

  SplitCone s;
  s.lin_rank = inner.sat.size();
  s.pointed_dim = d - s.lin_rank;

  std::vector<Vec> rows;
  auto to_ambient = [&](const Vec& x) {
    Vec amb(n, 0);
    for (std::size_t j = 0; j < d; ++j) amb = add(amb, scale(x[j], outer.sat[j]));
    return amb;
  };
  for (const Vec& r : inner.sat) rows.push_back(to_ambient(r));
  for (const Vec& r : inner.complement) rows.push_back(to_ambient(r));
  for (const Vec& r : outer.complement) rows.push_back(r);
  s.basis = Mat::from_rows(rows, n);
  s.basis_inv = inverse_unimodular(s.basis);

  for (const Vec& r : c.rays()) {
    Vec x = apply_map(s.basis_inv, r);
    Vec q(s.pointed_dim);
    for (std::size_t j = 0; j < s.pointed_dim; ++j) q[j] = x[s.lin_rank + j];
    s.pointed_rays.push_back(q);
  }
  return s;
}

std::vector<Int> facet_index_multiset(const Cone& c) {
  std::vector<Int> out;
  for (const Vec& h : c.facet_normals()) {
    std::vector<Vec> gens = c.lineality();
    for (const Vec& l : c.lineality()) gens.push_back(negate(l));
    for (const Vec& r : c.rays())
      if (dot(h, r) == 0) gens.push_back(r);
    out.push_back(Cone::from_generators(c.ambient_rank(), gens).multiplicity());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// solve M1 * G = M2 for a rational square G; integral unimodular results only
std::optional<Mat> solve_ray_map(const Mat& m1, const Mat& m2) {
  std::size_t q = m1.rows();
  Mat m1t = m1.transpose();
  Mat g(q, q);
  for (std::size_t col = 0; col < q; ++col) {
    Vec rhs(q);
    for (std::size_t i = 0; i < q; ++i) rhs[i] = m2(i, col);
    auto x = solve_left_rational(m1t, rhs);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < q; ++i) {
      if ((*x)[i].get_den() != 1) return std::nullopt;
      g(i, col) = (*x)[i].get_num();
    }
  }
  Int det = g.det();
  if (det != 1 && det != -1) return std::nullopt;
  return g;
}

IsoWitness refute(std::string reason) {
  IsoWitness w;
  w.reason = std::move(reason);
  return w;
}

IsoWitness accept(const Cone& a, const Cone& b, Mat g) {
  std::vector<Vec> mapped;
  for (const Vec& v : a.generators()) mapped.push_back(apply_map(g, v));
  if (!(Cone::from_generators(b.ambient_rank(), mapped) == b))
    throw std::logic_error("equivalence witness failed verification");
  IsoWitness w;
  w.equivalent = true;
  w.map = std::move(g);
  return w;
}

}  // namespace

IsoWitness cones_equivalent(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return refute("ambient_rank");
  if (a.dim() != b.dim()) return refute("dimension");
  if (a.lineality().size() != b.lineality().size()) return refute("lineality");
  if (a.rays().size() != b.rays().size()) return refute("ray_count");
  if (a.multiplicity() != b.multiplicity()) return refute("multiplicity");
  if (facet_index_multiset(a) != facet_index_multiset(b)) return refute("facet_multiplicities");

  std::size_t n = a.ambient_rank();
  if (a.dim() == 0) return accept(a, b, Mat::identity(n));

  SplitCone sa = split_cone(a);
  SplitCone sb = split_cone(b);
  std::size_t q = sa.pointed_dim;

  // subspace against subspace: map adapted bases onto each other
  if (q == 0) return accept(a, b, sa.basis_inv * sb.basis);

  // a fixed independent ray subset of the first cone pins the linear map
  std::size_t k = sa.pointed_rays.size();
  std::vector<std::size_t> pivot_rows;
  std::vector<Vec> acc;
  for (std::size_t i = 0; i < k && acc.size() < q; ++i) {
    acc.push_back(sa.pointed_rays[i]);
    if (hermite_normal_form(Mat::from_rows(acc, q)).rank != acc.size())
      acc.pop_back();
    else
      pivot_rows.push_back(i);
  }
  if (acc.size() != q) throw std::logic_error("pointed part rays do not span");
  Mat m1 = Mat::from_rows(acc, q);

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Mat m2(q, q);
    for (std::size_t i = 0; i < q; ++i) {
      const Vec& image = sb.pointed_rays[perm[pivot_rows[i]]];
      for (std::size_t j = 0; j < q; ++j) m2(i, j) = image[j];
    }
    std::optional<Mat> g = solve_ray_map(m1, m2);
    if (!g) continue;
    bool all_match = true;
    for (std::size_t i = 0; i < k && all_match; ++i)
      all_match = apply_map(*g, sa.pointed_rays[i]) == sb.pointed_rays[perm[i]];
    if (!all_match) continue;

    Mat block = Mat::identity(n);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) block(sa.lin_rank + i, sa.lin_rank + j) = (*g)(i, j);
    return accept(a, b, sa.basis_inv * block * sb.basis);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return refute("exhausted");
}

bool weight_monoids_equal(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  Cone da = a.dual();
  Cone db = b.dual();
  for (const Vec& g : da.generators())
    if (!db.contains(g)) return false;
  for (const Vec& g : db.generators())
    if (!da.contains(g)) return false;
  return true;
}

ConeFingerprint cone_fingerprint(const Cone& c) {
  ConeFingerprint f;
  f.ambient_rank = c.ambient_rank();
  f.dim = c.dim();
  f.ray_count = c.rays().size();
  f.facet_indices = facet_index_multiset(c);
  f.group = c.dual().rays().empty();
  if (!f.group) {
    SplitCone s = split_cone(c);
    Cone pointed = Cone::from_generators(s.pointed_dim, s.pointed_rays);
    f.dual_hilbert_size = hilbert_basis(pointed.dual()).size();
  }
  return f;
}

}  // namespace toric
