#include "toric/fan2d.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toric/error.hpp"

namespace toric {

namespace {

Int cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// 0 on [0, pi), 1 on [pi, 2*pi), measuring from the positive x axis.
int half_turn(const Vec& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half_turn(a);
  int hb = half_turn(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Consecutive steps turn counterclockwise by less than a half turn and the
// walk wraps the origin exactly once (one descent in angular order).
bool cyclic_order_ok(const std::vector<Vec>& rays) {
  std::size_t r = rays.size();
  std::size_t descents = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % r];
    if (cross(a, b) <= 0) return false;
    if (angle_less(b, a)) ++descents;
  }
  return descents == 1;
}

Vec apply_row(const Mat& g, const Vec& v) {
  Vec out(2, Int(0));
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) out[j] += v[i] * g(i, j);
  return out;
}

bool mat_entry_less(const Mat& a, const Mat& b) {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

}  // namespace

Fan2D::Fan2D(std::vector<Vec> rays) : rays_(std::move(rays)) {
  if (rays_.size() < 3)
    throw DomainError("BAD_FAN", "a complete fan in the plane has at least 3 rays");
  for (const Vec& v : rays_) {
    if (v.size() != 2) throw DomainError("BAD_FAN", "fan rays live in rank 2");
    if (is_zero(v) || content(v) != 1)
      throw DomainError("BAD_FAN", "fan rays must be primitive");
  }
  std::set<Vec> distinct(rays_.begin(), rays_.end());
  if (distinct.size() != rays_.size())
    throw DomainError("BAD_FAN", "fan rays must be distinct");

  if (!cyclic_order_ok(rays_)) {
    std::reverse(rays_.begin(), rays_.end());
    if (!cyclic_order_ok(rays_))
      throw DomainError("BAD_FAN",
                        "rays are not in convex cyclic order around the origin");
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (cross(rays_[i], rays_[(i + 1) % rays_.size()]) != 1)
      throw DomainError("NOT_SMOOTH", "adjacent rays must form a lattice basis");

  std::size_t least = 0;
  for (std::size_t i = 1; i < rays_.size(); ++i)
    if (lex_less(rays_[i], rays_[least])) least = i;
  std::rotate(rays_.begin(), rays_.begin() + least, rays_.end());
}

Fan2D projective_plane_fan() {
  return Fan2D({Vec{Int(1), Int(0)}, Vec{Int(0), Int(1)}, Vec{Int(-1), Int(-1)}});
}

std::vector<Int> self_intersections(const Fan2D& fan) {
  const std::vector<Vec>& v = fan.rays();
  std::size_t r = v.size();
  std::vector<Int> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    // neighbor sum is an integer multiple of the ray, by smoothness
    Vec s = add(v[(i + r - 1) % r], v[(i + 1) % r]);
    std::size_t k = (v[i][0] != 0) ? 0 : 1;
    Int a = s[k] / v[i][k];
    if (scale(a, v[i]) != s)
      throw std::logic_error("neighbor sum escaped the ray's span");
    out.push_back(-a);
  }
  return out;
}

Fan2D blow_up_all_corners(const Fan2D& fan) {
  const std::vector<Vec>& v = fan.rays();
  std::size_t r = v.size();
  std::vector<Vec> out;
  out.reserve(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    out.push_back(v[i]);
    out.push_back(add(v[i], v[(i + 1) % r]));
  }
  return Fan2D(std::move(out));
}

Fan2D tower_fan(std::size_t level, std::size_t cap) {
  if (level > cap) {
    std::ostringstream msg;
    msg << "tower level " << level << " exceeds the cap " << cap;
    throw DomainError("TOWER_CAP", msg.str());
  }
  Fan2D fan = projective_plane_fan();
  for (std::size_t i = 0; i < level; ++i) fan = blow_up_all_corners(fan);
  return fan;
}

std::size_t picard_rank(const Fan2D& fan) { return fan.size() - 2; }

std::vector<Mat> fan_automorphisms(const Fan2D& fan) {
  const std::vector<Vec>& v = fan.rays();
  std::size_t r = v.size();
  std::set<Vec> ray_set(v.begin(), v.end());
  // (v0, v1) is a lattice basis and must land on an adjacent pair, so the
  // 2r candidate images exhaust the possibilities.
  Mat base_inv = inverse_unimodular(Mat::from_rows({v[0], v[1]}, 2));
  std::vector<Mat> found;
  for (std::size_t j = 0; j < r; ++j) {
    for (int dir : {1, -1}) {
      std::size_t k = (dir == 1) ? (j + 1) % r : (j + r - 1) % r;
      Mat g = base_inv * Mat::from_rows({v[j], v[k]}, 2);
      bool ok = true;
      for (const Vec& w : v) {
        if (ray_set.find(apply_row(g, w)) == ray_set.end()) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(g);
    }
  }
  std::sort(found.begin(), found.end(), mat_entry_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<std::pair<Vec, Int>> negative_ray_report(const Fan2D& fan) {
  std::vector<Int> d2 = self_intersections(fan);
  const std::vector<Vec>& v = fan.rays();
  std::vector<std::pair<Vec, Int>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (d2[i] < 0) out.emplace_back(v[i], d2[i]);
  return out;
}

std::string fan_svg(const Fan2D& fan) {
  Int m(1);
  for (const Vec& v : fan.rays())
    for (const Int& c : v) {
      Int a = abs(c);
      if (a > m) m = a;
    }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 400 400\">\n";
  svg << "  <circle cx=\"200\" cy=\"200\" r=\"3\" fill=\"black\"/>\n";
  for (const Vec& v : fan.rays()) {
    Int x = Int(200) + Int(180) * v[0] / m;
    Int y = Int(200) - Int(180) * v[1] / m;
    svg << "  <line x1=\"200\" y1=\"200\" x2=\"" << x << "\" y2=\"" << y
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace toric
