#include "toric/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toric/error.hpp"
#include "toric/monoid.hpp"

namespace toric {

namespace {

constexpr long kFindRootDepthCap = 64;

void check_ray_index(const Cone& sigma, std::size_t ray_index) {
  if (ray_index >= sigma.rays().size())
    throw DomainError("RAY_INDEX", "extremal ray index out of range");
}

// walk the affine slice <m, v> = -1 within the box |m|_inf <= bound: free
// coordinates run over the box, the pivot coordinate is solved for
template <typename Fn>
void for_each_slice_point(const Vec& v, const Int& bound, Fn&& fn) {
  std::size_t n = v.size();
  std::size_t pivot = 0;
  while (v[pivot] == 0) ++pivot;
  Vec m(n, -bound);
  m[pivot] = 0;
  for (;;) {
    Int rhs = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pivot) rhs -= m[i] * v[i];
    if (rhs % v[pivot] == 0) {
      Int mp = rhs / v[pivot];
      if (abs(mp) <= bound) {
        m[pivot] = mp;
        fn(m);
        m[pivot] = 0;
      }
    }
    std::size_t i = 0;
    while (i < n) {
      if (i == pivot) {
        ++i;
        continue;
      }
      m[i] += 1;
      if (m[i] <= bound) break;
      m[i] = -bound;
      ++i;
    }
    if (i == n) break;
  }
}

}  // namespace

bool is_root(const Cone& sigma, std::size_t ray_index, const Vec& m) {
  check_ray_index(sigma, ray_index);
  const std::vector<Vec>& rays = sigma.rays();
  if (dot(m, rays[ray_index]) != -1) return false;
  for (std::size_t j = 0; j < rays.size(); ++j)
    if (j != ray_index && dot(m, rays[j]) < 0) return false;
  return true;
}

std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, const Int& bound) {
  std::vector<DemazureRoot> out;
  for (std::size_t i = 0; i < sigma.rays().size(); ++i) {
    for_each_slice_point(sigma.rays()[i], bound, [&](const Vec& m) {
      if (is_root(sigma, i, m)) out.push_back({i, m});
    });
  }
  std::sort(out.begin(), out.end(), [](const DemazureRoot& a, const DemazureRoot& b) {
    if (a.ray_index != b.ray_index) return a.ray_index < b.ray_index;
    return lex_less(a.weight, b.weight);
  });
  std::map<Vec, std::size_t> seen;
  for (const DemazureRoot& r : out) {
    auto [it, fresh] = seen.emplace(r.weight, r.ray_index);
    if (!fresh && it->second != r.ray_index)
      throw std::logic_error("root weight sets of distinct rays intersect");
  }
  return out;
}

DemazureRoot find_root(const Cone& sigma, std::size_t ray_index) {
  if (sigma.is_zero())
    throw DomainError("IS_TORUS", "the variety is a torus; it has no root subgroups");
  check_ray_index(sigma, ray_index);
  const Vec& v = sigma.rays()[ray_index];
  for (long b = 1; b <= kFindRootDepthCap; ++b) {
    std::vector<Vec> hits;
    for_each_slice_point(v, Int(b), [&](const Vec& m) {
      if (is_root(sigma, ray_index, m)) hits.push_back(m);
    });
    if (!hits.empty()) {
      std::sort(hits.begin(), hits.end(), lex_less);
      return {ray_index, hits.front()};
    }
  }
  // unreachable for genuine cone input: every extremal ray carries a root
  throw std::logic_error("root search exceeded the depth cap");
}

bool is_torus(const Cone& sigma) { return sigma.is_zero(); }

std::vector<DemazureRoot> commuting_root_family(const Cone& sigma, std::size_t ray_index,
                                                const Vec& e0) {
  if (!sigma.is_full_dimensional())
    throw DomainError("DIMENSION", "commuting families need a full-dimensional cone");
  check_ray_index(sigma, ray_index);
  if (!is_root(sigma, ray_index, e0))
    throw DomainError("NOT_A_ROOT", "e0 is not a root weight for the given ray");

  std::size_t n = sigma.ambient_rank();
  std::vector<DemazureRoot> family{{ray_index, e0}};
  std::vector<Vec> picked;
  AffineMonoid slice = invariant_subalgebra(sigma, ray_index);
  for (const Vec& a : slice.hilbert_basis()) {
    if (picked.size() == n - 1) break;
    picked.push_back(a);
    if (hermite_normal_form(Mat::from_rows(picked, n)).rank != picked.size()) picked.pop_back();
  }
  if (picked.size() != n - 1)
    throw std::logic_error("ray slice does not span the orthogonal hyperplane");

  std::vector<Vec> weights{e0};
  for (const Vec& a : picked) {
    Vec w = add(e0, a);
    if (!is_root(sigma, ray_index, w))
      throw std::logic_error("shifted weight left the root set");
    family.push_back({ray_index, w});
    weights.push_back(w);
  }
  if (Mat::from_rows(weights, n).det() == 0)
    throw std::logic_error("family weights are linearly dependent");
  return family;
}

QuotientStructure root_kernel(const Vec& e, std::size_t ambient_rank) {
  if (is_zero(e)) throw DomainError("ZERO_VECTOR", "kernel of the zero weight is undefined");
  QuotientStructure q = quotient_structure(ambient_rank, {e});
  if (content(e) == 1 && !q.invariant_factors.empty())
    throw std::logic_error("primitive weight produced a disconnected kernel");
  return q;
}

}  // namespace toric
