#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Generators of { x : <h, x> >= 0 for all h in constraints }: a lineality
// lattice basis (saturated, Hermite rows) plus extreme-ray representatives,
// each canonically reduced modulo the lineality and lex-sorted.
struct DDResult {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};
DDResult dd_cone_from_constraints(std::size_t ambient_rank, std::vector<Vec> constraints);

// Rational polyhedral cone in canonical form.  Both a generator description
// (rays + lineality) and a facet description (inequalities + span equations)
// are stored; they are each other's duals, so dual() is an exact swap.
//
// Non-pointed cones are legal values: the lineality space is carried as an
// explicit lattice basis and generators() emits it as +/- pairs.  Operations
// that need strong convexity say so.
class Cone {
 public:
  static Cone from_generators(std::size_t ambient_rank, const std::vector<Vec>& gens);
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<Vec>& ineqs);

  std::size_t ambient_rank() const { return n_; }
  // canonical primitive extreme-ray representatives (pointed part), lex-sorted
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  // primitive inequality normals: sigma = { x : <h, x> >= 0 } within the span
  const std::vector<Vec>& facet_normals() const { return dual_rays_; }
  // span equations: sigma lies in { x : <l, x> = 0 }
  const std::vector<Vec>& span_equations() const { return dual_lineality_; }
  // rays plus +/- lineality pairs, lex-sorted (the JSON generator list)
  std::vector<Vec> generators() const;

  Cone dual() const;

  bool contains(const Vec& p) const;
  bool is_strongly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return dual_lineality_.empty(); }
  std::size_t dim() const { return n_ - dual_lineality_.size(); }
  // minimal generators extend to a lattice basis of span intersect Z^n
  bool is_smooth() const;
  // index of the sublattice generated by the minimal generators inside the
  // saturation of the span: 1 exactly for smooth simplicial cones
  Int multiplicity() const;
  // cone spanned by all extremal rays except rays()[ray_index]
  Cone face_complement(std::size_t ray_index) const;

  bool operator==(const Cone& other) const {
    return n_ == other.n_ && rays_ == other.rays_ && lineality_ == other.lineality_;
  }

 private:
  Cone() = default;
  std::size_t n_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  std::vector<Vec> dual_rays_;
  std::vector<Vec> dual_lineality_;
};

}  // namespace toric
