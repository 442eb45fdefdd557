#pragma once

#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

// weight e of a root subgroup attached to an extremal ray: <e, v_ray> = -1
// and <e, v_other> >= 0 for every other extremal ray
struct DemazureRoot {
  std::size_t ray_index = 0;
  Vec weight;
  bool operator==(const DemazureRoot& o) const {
    return ray_index == o.ray_index && weight == o.weight;
  }
};

bool is_root(const Cone& sigma, std::size_t ray_index, const Vec& m);

// all roots of infinity-norm <= bound, ordered by (ray index, lex weight);
// the per-ray weight sets are checked to be pairwise disjoint
std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, const Int& bound);

// lex-least root of minimal infinity-norm for the given ray, found by
// iterative deepening over the affine slice <m, v_ray> = -1
DemazureRoot find_root(const Cone& sigma, std::size_t ray_index);

// true iff sigma = {0}; equivalently, no ray admits a root subgroup
bool is_torus(const Cone& sigma);

// weights e0, e0+a_2, ..., e0+a_n for the lex-least linearly independent
// invariants a_j taken from the Hilbert basis of the ray slice; the weights
// are linearly independent and the root subgroups pairwise commute
std::vector<DemazureRoot> commuting_root_family(const Cone& sigma, std::size_t ray_index,
                                                const Vec& e0);

// structure of ker(e) inside the torus; primitive weights give a connected
// (torsion-free) kernel
QuotientStructure root_kernel(const Vec& e, std::size_t ambient_rank);

}  // namespace toric
