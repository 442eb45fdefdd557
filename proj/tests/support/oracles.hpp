#pragma once

// Independent brute-force oracles used to validate the geometric engines.
// These deliberately avoid the library's own algorithmic routes.

#include <functional>
#include <vector>

#include "toric/lattice.hpp"

namespace testsupport {

using toric::Int;
using toric::Mat;
using toric::Rat;
using toric::Vec;

// p lies in cone(gens) iff some linearly independent subset carries it with
// nonnegative rational coefficients.
inline bool caratheodory_member(const std::vector<Vec>& gens, const Vec& p) {
  if (toric::is_zero(p)) return true;
  std::size_t k = gens.size();
  if (k > 20) throw std::runtime_error("oracle limited to small generator lists");
  for (std::size_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Vec> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) subset.push_back(gens[i]);
    if (subset.size() > p.size()) continue;
    Mat s = Mat::from_rows(subset, p.size());
    auto sol = toric::solve_left_rational(s, p);
    if (!sol.has_value()) continue;
    bool nonneg = true;
    for (const Rat& c : *sol)
      if (c < 0) nonneg = false;
    if (!nonneg) continue;
    // solve_left_rational pins free variables to zero, so verify exactly
    Vec check(p.size(), Int(0));
    bool integral_combo = true;
    (void)integral_combo;
    std::vector<Rat> acc(p.size(), Rat(0));
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) acc[j] += (*sol)[i] * Rat(subset[i][j]);
    bool match = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (acc[j] != Rat(p[j])) match = false;
    if (match) return true;
  }
  return false;
}

// Enumerate all lattice points x with lo <= x_i <= hi componentwise.
inline void for_each_box_point(std::size_t n, const Int& lo, const Int& hi,
                               const std::function<void(const Vec&)>& fn) {
  Vec x(n, lo);
  if (n == 0) return;
  for (;;) {
    fn(x);
    std::size_t i = 0;
    while (i < n) {
      x[i] += 1;
      if (x[i] <= hi) break;
      x[i] = lo;
      ++i;
    }
    if (i == n) break;
  }
}

}  // namespace testsupport
