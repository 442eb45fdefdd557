#include "toric/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace toric {

namespace {

struct RayRec {
  Vec v;
  std::vector<char> tight;  // one flag per processed constraint
};

// tight(a) intersect tight(b) contained in tight(r) for some third ray r
// refutes adjacency of a and b in the current minimal description.
bool adjacent(const std::vector<RayRec>& rays, std::size_t a, std::size_t b) {
  const auto& ta = rays[a].tight;
  const auto& tb = rays[b].tight;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (r == a || r == b) continue;
    const auto& tr = rays[r].tight;
    bool contains_common = true;
    for (std::size_t i = 0; i < ta.size() && contains_common; ++i)
      if (ta[i] && tb[i] && !tr[i]) contains_common = false;
    if (contains_common) return false;
  }
  return true;
}

}  // namespace

DDResult dd_cone_from_constraints(std::size_t ambient_rank, std::vector<Vec> constraints) {
  // normalize the constraint list: primitive, deduplicated, sorted
  std::vector<Vec> hs;
  for (const Vec& h : constraints) {
    if (h.size() != ambient_rank) throw ParseError("constraint length does not match ambient rank");
    if (is_zero(h)) continue;
    hs.push_back(primitive_part(h));
  }
  std::sort(hs.begin(), hs.end(), lex_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  std::vector<Vec> lin = Mat::identity(ambient_rank).row_list();
  std::vector<RayRec> rays;

  for (std::size_t t = 0; t < hs.size(); ++t) {
    const Vec& h = hs[t];
    std::size_t kill = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(h, lin[i]) != 0) {
        kill = i;
        break;
      }
    if (kill < lin.size()) {
      Vec l0 = lin[kill];
      if (dot(h, l0) < 0) l0 = negate(l0);
      Int hl0 = dot(h, l0);
      lin.erase(lin.begin() + (long)kill);
      for (Vec& l : lin) {
        Int hl = dot(h, l);
        if (hl != 0) l = primitive_part(sub(scale(hl0, l), scale(hl, l0)));
      }
      for (RayRec& r : rays) {
        Int hr = dot(h, r.v);
        if (hr != 0) r.v = primitive_part(sub(scale(hl0, r.v), scale(hr, l0)));
        r.tight.push_back(1);
      }
      RayRec nr;
      nr.v = primitive_part(l0);
      nr.tight.assign(t, 1);
      nr.tight.push_back(0);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<Int> val(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].v);
      if (val[i] > 0) plus.push_back(i);
      if (val[i] < 0) minus.push_back(i);
    }
    std::vector<RayRec> created;
    for (std::size_t p : plus)
      for (std::size_t q : minus) {
        if (!adjacent(rays, p, q)) continue;
        RayRec nr;
        nr.v = primitive_part(sub(scale(val[p], rays[q].v), scale(val[q], rays[p].v)));
        nr.tight.resize(t + 1);
        for (std::size_t i = 0; i < t; ++i) nr.tight[i] = rays[p].tight[i] && rays[q].tight[i];
        nr.tight[t] = 1;
        created.push_back(std::move(nr));
      }
    std::vector<RayRec> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      rays[i].tight.push_back(val[i] == 0);
      next.push_back(std::move(rays[i]));
    }
    for (RayRec& nr : created) next.push_back(std::move(nr));
    rays = std::move(next);
  }

  DDResult out;
  // the elimination keeps lin integral but possibly non-saturated; store the
  // saturation of its real span, in Hermite form
  out.lineality = span_lattice_basis(ambient_rank, lin).sat;

  if (out.lineality.empty()) {
    std::set<Vec> reps;
    for (const RayRec& r : rays) reps.insert(primitive_part(r.v));
    out.rays.assign(reps.begin(), reps.end());
  } else {
    SpanBasis sb = span_lattice_basis(ambient_rank, out.lineality);
    std::vector<Vec> full = sb.sat;
    full.insert(full.end(), sb.complement.begin(), sb.complement.end());
    Mat basis = Mat::from_rows(full, ambient_rank);
    Mat basis_inv = inverse_unimodular(basis);
    std::size_t k = sb.sat.size();
    std::set<Vec> reps;
    for (const RayRec& r : rays) {
      Vec c(ambient_rank, Int(0));
      for (std::size_t j = 0; j < ambient_rank; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i) c[j] += r.v[i] * basis_inv(i, j);
      Vec quotient(c.begin() + (long)k, c.end());
      Int g = content(quotient);
      assert(g != 0);
      Vec lift(ambient_rank, Int(0));
      for (std::size_t i = k; i < ambient_rank; ++i)
        lift = add(lift, scale(c[i] / g, full[i]));
      reps.insert(reduce_mod_lattice(sb.sat, lift));
    }
    out.rays.assign(reps.begin(), reps.end());
  }
  return out;
}

Cone Cone::from_generators(std::size_t ambient_rank, const std::vector<Vec>& gens) {
  if (ambient_rank == 0) throw ParseError("ambient rank must be positive");
  for (const Vec& g : gens)
    if (g.size() != ambient_rank) throw ParseError("generator length does not match ambient rank");
  std::vector<Vec> nonzero;
  for (const Vec& g : gens)
    if (!toric::is_zero(g)) nonzero.push_back(g);

  DDResult dual = dd_cone_from_constraints(ambient_rank, nonzero);
  std::vector<Vec> dual_gens = dual.rays;
  for (const Vec& l : dual.lineality) {
    dual_gens.push_back(l);
    dual_gens.push_back(negate(l));
  }
  DDResult primal = dd_cone_from_constraints(ambient_rank, dual_gens);

  Cone c;
  c.n_ = ambient_rank;
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  c.dual_rays_ = dual.rays;
  c.dual_lineality_ = dual.lineality;
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_rank, const std::vector<Vec>& ineqs) {
  if (ambient_rank == 0) throw ParseError("ambient rank must be positive");
  DDResult primal = dd_cone_from_constraints(ambient_rank, ineqs);
  std::vector<Vec> gens = primal.rays;
  for (const Vec& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  DDResult dual = dd_cone_from_constraints(ambient_rank, gens);

  Cone c;
  c.n_ = ambient_rank;
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  c.dual_rays_ = dual.rays;
  c.dual_lineality_ = dual.lineality;
  return c;
}

std::vector<Vec> Cone::generators() const {
  std::vector<Vec> gens = rays_;
  for (const Vec& l : lineality_) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  std::sort(gens.begin(), gens.end(), lex_less);
  return gens;
}

Cone Cone::dual() const {
  Cone d;
  d.n_ = n_;
  d.rays_ = dual_rays_;
  d.lineality_ = dual_lineality_;
  d.dual_rays_ = rays_;
  d.dual_lineality_ = lineality_;
  return d;
}

bool Cone::contains(const Vec& p) const {
  if (p.size() != n_) throw ParseError("point length does not match ambient rank");
  for (const Vec& l : dual_lineality_)
    if (dot(l, p) != 0) return false;
  for (const Vec& h : dual_rays_)
    if (dot(h, p) < 0) return false;
  return true;
}

bool Cone::is_smooth() const {
  std::vector<Vec> stack = lineality_;
  stack.insert(stack.end(), rays_.begin(), rays_.end());
  if (stack.size() != dim()) return false;
  return multiplicity() == 1;
}

Int Cone::multiplicity() const {
  std::vector<Vec> stack = lineality_;
  stack.insert(stack.end(), rays_.begin(), rays_.end());
  if (stack.empty()) return 1;
  SmithResult s = smith_normal_form(Mat::from_rows(stack, n_));
  Int m = 1;
  for (const Int& d : s.diagonal())
    if (d != 0) m *= d;
  return m;
}

Cone Cone::face_complement(std::size_t ray_index) const {
  if (ray_index >= rays_.size())
    throw DomainError("RAY_INDEX", "extremal ray index out of range");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (i != ray_index) gens.push_back(rays_[i]);
  for (const Vec& l : lineality_) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return from_generators(n_, gens);
}

}  // namespace toric
