#include "toric/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Pulling triangulation of a pointed cone into simplicial subcones spanned by
// extremal rays.  Covers the cone; that is all the parallelepiped step needs.
void triangulate(std::size_t n, const std::vector<Vec>& rays,
                 std::vector<std::vector<Vec>>& out) {
  Cone c = Cone::from_generators(n, rays);
  const std::vector<Vec>& r = c.rays();
  if (r.size() == c.dim()) {
    out.push_back(r);
    return;
  }
  const Vec& apex = r.front();
  for (const Vec& h : c.facet_normals()) {
    if (dot(h, apex) == 0) continue;
    std::vector<Vec> facet_rays;
    for (const Vec& v : r)
      if (dot(h, v) == 0) facet_rays.push_back(v);
    std::size_t begin = out.size();
    triangulate(n, facet_rays, out);
    for (std::size_t i = begin; i < out.size(); ++i) out[i].push_back(apex);
  }
}

// Lattice points of the half-open parallelepiped { sum t_i w_i : 0 <= t_i < 1 }
// spanned by the rows of a full-rank square matrix: one representative per
// coset of Z^d modulo the row lattice, shifted into the box.
void parallelepiped_points(const std::vector<Vec>& simplex, std::set<Vec>& out) {
  std::size_t d = simplex.size();
  Mat w = Mat::from_rows(simplex, d);
  SmithResult snf = smith_normal_form(w);
  std::vector<Int> diag = snf.diagonal();
  Vec c(d, 0);
  while (true) {
    if (!std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; })) {
      Vec y(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) y[j] += c[i] * snf.v(i, j);
      auto t = solve_left_rational(w, y);
      for (std::size_t i = 0; i < d; ++i) {
        Int f = floor_rat((*t)[i]);
        if (f != 0) y = sub(y, scale(f, simplex[i]));
      }
      out.insert(y);
    }
    std::size_t k = 0;
    while (k < d) {
      ++c[k];
      if (c[k] < diag[k]) break;
      c[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
}

Int height(const std::vector<Vec>& facets, const Vec& x) {
  Int s = 0;
  for (const Vec& h : facets) s += dot(h, x);
  return s;
}

// Hilbert basis of a full-dimensional pointed cone: candidates from the
// fundamental parallelepipeds of a triangulation plus the rays themselves,
// sieved for irreducibility in increasing facet-height order.
std::vector<Vec> hilbert_basis_full_dim(std::size_t d, const std::vector<Vec>& rays) {
  Cone c = Cone::from_generators(d, rays);
  const std::vector<Vec>& facets = c.facet_normals();
  std::vector<std::vector<Vec>> simplices;
  triangulate(d, c.rays(), simplices);
  std::set<Vec> cand(c.rays().begin(), c.rays().end());
  for (const std::vector<Vec>& s : simplices) parallelepiped_points(s, cand);

  std::vector<Vec> order(cand.begin(), cand.end());
  std::sort(order.begin(), order.end(), [&](const Vec& a, const Vec& b) {
    Int ha = height(facets, a), hb = height(facets, b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  std::vector<Vec> hb;
  for (const Vec& x : order) {
    bool reducible = false;
    for (const Vec& h : hb) {
      Vec rest = sub(x, h);
      if (std::all_of(facets.begin(), facets.end(),
                      [&](const Vec& f) { return dot(f, rest) >= 0; })) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.push_back(x);
  }
  std::sort(hb.begin(), hb.end(), lex_less);
  return hb;
}

bool decompose_dfs(const std::vector<Vec>& basis, const std::vector<Vec>& facets,
                   const std::vector<Vec>& equations, std::size_t from, const Vec& m,
                   std::map<Vec, Int>& counts) {
  if (std::all_of(m.begin(), m.end(), [](const Int& x) { return x == 0; })) return true;
  for (std::size_t i = from; i < basis.size(); ++i) {
    Vec rest = sub(m, basis[i]);
    bool inside = std::all_of(equations.begin(), equations.end(),
                              [&](const Vec& l) { return dot(l, rest) == 0; }) &&
                  std::all_of(facets.begin(), facets.end(),
                              [&](const Vec& h) { return dot(h, rest) >= 0; });
    if (!inside) continue;
    ++counts[basis[i]];
    if (decompose_dfs(basis, facets, equations, i, rest, counts)) return true;
    if (--counts[basis[i]] == 0) counts.erase(basis[i]);
  }
  return false;
}

}  // namespace

std::vector<Vec> hilbert_basis(const Cone& c) {
  if (!c.is_strongly_convex())
    throw DomainError("LINEALITY",
                      "cone has a nontrivial lineality space; split off the torus factor "
                      "and take the Hilbert basis of the pointed part");
  if (c.rays().empty()) return {};
  std::size_t n = c.ambient_rank();
  std::size_t d = c.dim();
  if (d == n) return hilbert_basis_full_dim(n, c.rays());

  SpanBasis sb = span_lattice_basis(n, c.rays());
  std::vector<Vec> rays_d;
  for (const Vec& r : c.rays()) rays_d.push_back(*coordinates_in_hermite_basis(sb.sat, r));
  std::vector<Vec> hb_d = hilbert_basis_full_dim(d, rays_d);
  std::vector<Vec> hb;
  for (const Vec& x : hb_d) {
    Vec amb(n, 0);
    for (std::size_t i = 0; i < d; ++i) amb = add(amb, scale(x[i], sb.sat[i]));
    hb.push_back(amb);
  }
  std::sort(hb.begin(), hb.end(), lex_less);
  return hb;
}

const std::vector<Vec>& AffineMonoid::hilbert_basis() const {
  if (!hb_) hb_ = toric::hilbert_basis(cone_);
  return *hb_;
}

std::vector<Vec> AffineMonoid::generators() const {
  if (cone_.is_strongly_convex()) return hilbert_basis();

  std::size_t n = cone_.ambient_rank();
  const std::vector<Vec>& lin = cone_.lineality();
  std::size_t r = lin.size();
  std::vector<Vec> gens;
  for (const Vec& l : lin) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }

  // Hilbert basis of the image in the quotient by the lineality lattice,
  // lifted back along the complement basis.  Any lift lies in the cone since
  // cone + lineality = cone; reduce for a canonical representative.
  if (!cone_.rays().empty()) {
    SpanBasis sb = span_lattice_basis(n, lin);
    std::vector<Vec> basis = sb.sat;
    basis.insert(basis.end(), sb.complement.begin(), sb.complement.end());
    Mat basis_inv = inverse_unimodular(Mat::from_rows(basis, n));
    std::vector<Vec> image_rays;
    for (const Vec& ray : cone_.rays()) {
      Vec q(n - r);
      for (std::size_t j = 0; j < n - r; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += ray[k] * basis_inv(k, r + j);
        q[j] = s;
      }
      image_rays.push_back(q);
    }
    for (const Vec& q : toric::hilbert_basis(Cone::from_generators(n - r, image_rays))) {
      Vec lift(n, 0);
      for (std::size_t j = 0; j < n - r; ++j) lift = add(lift, scale(q[j], sb.complement[j]));
      gens.push_back(reduce_mod_lattice(sb.sat, lift));
    }
  }
  std::sort(gens.begin(), gens.end(), lex_less);
  return gens;
}

bool AffineMonoid::contains(const Vec& m) const { return cone_.contains(m); }

std::optional<std::vector<std::pair<Vec, Int>>> AffineMonoid::decompose(const Vec& m) const {
  if (!contains(m)) return std::nullopt;
  const std::vector<Vec>& basis = hilbert_basis();
  std::map<Vec, Int> counts;
  if (!decompose_dfs(basis, cone_.facet_normals(), cone_.span_equations(), 0, m, counts))
    return std::nullopt;  // unreachable for a correct basis; keeps the API total
  return std::vector<std::pair<Vec, Int>>(counts.begin(), counts.end());
}

AffineMonoid invariant_subalgebra(const Cone& sigma, std::size_t ray_index) {
  if (ray_index >= sigma.rays().size())
    throw DomainError("RAY_INDEX", "extremal ray index out of range");
  const Vec& v = sigma.rays()[ray_index];
  std::vector<Vec> ineqs = sigma.generators();
  ineqs.push_back(v);
  ineqs.push_back(negate(v));
  return AffineMonoid(Cone::from_inequalities(sigma.ambient_rank(), ineqs));
}

AffineMonoid weight_monoid(const Cone& sigma) { return AffineMonoid(sigma.dual()); }

}  // namespace toric
