#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

// outcome of the lattice-equivalence decision: either a unimodular change of
// coordinates g with (x -> x g) carrying the first cone onto the second, or
// the first invariant that refutes equivalence
struct IsoWitness {
  bool equivalent = false;
  std::optional<Mat> map;
  std::string reason;
};

IsoWitness cones_equivalent(const Cone& a, const Cone& b);

// sigma1-dual and sigma2-dual cut the same monoid out of the lattice; by
// biduality this holds exactly when the cones coincide
bool weight_monoids_equal(const Cone& a, const Cone& b);

// cheap necessary invariants for equivalence, plus the dual Hilbert-basis
// size of the pointed part (group-like cones carry a flag instead)
struct ConeFingerprint {
  std::size_t ambient_rank = 0;
  std::size_t dim = 0;
  std::size_t ray_count = 0;
  std::vector<Int> facet_indices;
  std::size_t dual_hilbert_size = 0;
  bool group = false;
  bool operator==(const ConeFingerprint& o) const = default;
};
ConeFingerprint cone_fingerprint(const Cone& c);

}  // namespace toric
