#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Complete smooth fan in Z^2: primitive rays in counterclockwise cyclic
// order, stored with the lexicographically least ray first.  Construction
// accepts any rotation and either orientation of a valid ray list.
class Fan2D {
 public:
  explicit Fan2D(std::vector<Vec> rays);

  const std::vector<Vec>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }

  bool operator==(const Fan2D& other) const { return rays_ == other.rays_; }
  bool operator!=(const Fan2D& other) const { return !(*this == other); }

 private:
  std::vector<Vec> rays_;
};

Fan2D projective_plane_fan();

// Self-intersection of the invariant curve of each ray, aligned with rays().
std::vector<Int> self_intersections(const Fan2D& fan);

// Inserts v_i + v_{i+1} into every corner; the ray count doubles.
Fan2D blow_up_all_corners(const Fan2D& fan);

// Level i of the blow-up tower over the plane fan.
Fan2D tower_fan(std::size_t level, std::size_t cap = 12);

std::size_t picard_rank(const Fan2D& fan);

// Every unimodular map permuting the ray set, sorted by entries.
std::vector<Mat> fan_automorphisms(const Fan2D& fan);

// (ray, self-intersection) for each curve with negative self-intersection,
// in cyclic order.
std::vector<std::pair<Vec, Int>> negative_ray_report(const Fan2D& fan);

// Standalone line drawing of the rays; byte-deterministic.
std::string fan_svg(const Fan2D& fan);

}  // namespace toric
