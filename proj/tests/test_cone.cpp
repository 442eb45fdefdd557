#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "toric/cone.hpp"

using namespace toric;
using testsupport::caratheodory_member;
using testsupport::rand_unimodular;
using testsupport::rand_vec;

namespace {

Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }
Vec v3(long a, long b, long c) { return Vec{Int(a), Int(b), Int(c)}; }

Cone random_pointed_cone(std::mt19937& rng, std::size_t n, bool full_dim_required) {
  for (;;) {
    std::size_t k = n + rng() % 3;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) {
      Vec g = rand_vec(rng, n, -3, 3);
      if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Cone c = Cone::from_generators(n, gens);
    if (!c.is_strongly_convex() || c.is_zero()) continue;
    if (full_dim_required && !c.is_full_dimensional()) continue;
    return c;
  }
}

}  // namespace

TEST_CASE("dual cone frozen examples") {
  Cone quadrant = Cone::from_generators(2, {v2(1, 0), v2(0, 1)});
  CHECK(quadrant.dual().rays() == std::vector<Vec>{v2(0, 1), v2(1, 0)});
  CHECK(quadrant.dual() == quadrant);

  Cone a1 = Cone::from_generators(2, {v2(1, 0), v2(1, 2)});
  CHECK(a1.dual().rays() == std::vector<Vec>{v2(0, 1), v2(2, -1)});

  Cone zero = Cone::from_generators(2, {});
  CHECK(zero.is_zero());
  Cone full = zero.dual();
  CHECK(full.rays().empty());
  CHECK(full.lineality() == std::vector<Vec>{v2(1, 0), v2(0, 1)});
  std::vector<Vec> gens = full.generators();
  CHECK(gens == std::vector<Vec>{v2(-1, 0), v2(0, -1), v2(0, 1), v2(1, 0)});
}

TEST_CASE("extremal ray reduction") {
  Cone c = Cone::from_generators(2, {v2(1, 0), v2(0, 1), v2(1, 1)});
  CHECK(c.rays() == std::vector<Vec>{v2(0, 1), v2(1, 0)});

  Cone zero = Cone::from_generators(2, {});
  CHECK(zero.rays().empty());

  // non-primitive input generators are normalized
  Cone scaled = Cone::from_generators(2, {v2(2, 0), v2(3, 6)});
  CHECK(scaled.rays() == std::vector<Vec>{v2(1, 0), v2(1, 2)});
}

TEST_CASE("face complement") {
  Cone orthant = Cone::from_generators(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  REQUIRE(orthant.rays().size() == 3);
  // rays are lex-sorted: (0,0,1), (0,1,0), (1,0,0)
  Cone fc = orthant.face_complement(2);
  CHECK(fc.rays() == std::vector<Vec>{v3(0, 0, 1), v3(0, 1, 0)});
  CHECK_THROWS_AS(orthant.face_complement(5), DomainError);
}

TEST_CASE("predicates") {
  Cone quadrant = Cone::from_generators(2, {v2(1, 0), v2(0, 1)});
  CHECK(quadrant.is_smooth());
  CHECK(quadrant.is_strongly_convex());
  CHECK(quadrant.is_full_dimensional());
  CHECK(quadrant.dim() == 2);
  CHECK(quadrant.multiplicity() == 1);

  Cone a1 = Cone::from_generators(2, {v2(1, 0), v2(1, 2)});
  CHECK(!a1.is_smooth());
  CHECK(a1.multiplicity() == 2);

  Cone zero = Cone::from_generators(2, {});
  CHECK(zero.is_zero());
  CHECK(zero.dim() == 0);
  CHECK(zero.is_smooth());

  Cone ray = Cone::from_generators(2, {v2(1, 1)});
  CHECK(ray.dim() == 1);
  CHECK(!ray.is_full_dimensional());
  CHECK(ray.is_strongly_convex());
  CHECK(ray.is_smooth());

  // the dual of a non-full-dimensional cone is not strongly convex
  Cone halfplane = ray.dual();
  CHECK(!halfplane.is_strongly_convex());
  CHECK(halfplane.lineality().size() == 1);
}

TEST_CASE("halfplane from inequalities") {
  Cone h = Cone::from_inequalities(2, {v2(1, 0)});
  CHECK(h.lineality() == std::vector<Vec>{v2(0, 1)});
  CHECK(h.rays() == std::vector<Vec>{v2(1, 0)});
  CHECK(h.contains(v2(5, -7)));
  CHECK(!h.contains(v2(-1, 0)));
}

TEST_CASE("biduality and round trips on random cones") {
  std::mt19937 rng(1234);
  for (int it = 0; it < 80; ++it) {
    std::size_t n = 2 + rng() % 2;
    std::size_t k = 1 + rng() % 4;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rand_vec(rng, n, -3, 3));
    Cone c = Cone::from_generators(n, gens);

    // recompute through the engine rather than the stored swap
    Cone d_engine = Cone::from_generators(n, c.dual().generators());
    CHECK(d_engine == c.dual());
    CHECK(d_engine.dual() == c);
    CHECK(Cone::from_generators(n, c.generators()) == c);

    // facet description and generator description agree on membership
    for (const Vec& g : gens) CHECK(c.contains(g));
  }
}

TEST_CASE("membership agrees with nonnegative-combination solve") {
  std::mt19937 rng(777);
  for (int it = 0; it < 25; ++it) {
    std::size_t n = 2 + rng() % 2;
    std::size_t k = 1 + rng() % 3;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rand_vec(rng, n, -2, 2));
    Cone c = Cone::from_generators(n, gens);
    std::vector<Vec> cgens = c.generators();
    for (int j = 0; j < 220; ++j) {
      Vec p = rand_vec(rng, n, -4, 4);
      CHECK(c.contains(p) == caratheodory_member(cgens, p));
    }
  }
}

TEST_CASE("extremality of reported rays") {
  std::mt19937 rng(31);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng() % 2;
    Cone c = random_pointed_cone(rng, n, false);
    const auto& rays = c.rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (j != i) others.push_back(rays[j]);
      CHECK(!caratheodory_member(others, rays[i]));
    }
  }
}

TEST_CASE("each facet normal is tight on enough independent rays") {
  std::mt19937 rng(555);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng() % 2;
    Cone c = random_pointed_cone(rng, n, true);
    for (const Vec& h : c.facet_normals()) {
      std::vector<Vec> tight;
      for (const Vec& r : c.rays())
        if (dot(h, r) == 0) tight.push_back(r);
      SmithResult s = smith_normal_form(Mat::from_rows(tight, n));
      std::size_t rank = 0;
      for (const Int& d : s.diagonal())
        if (d != 0) ++rank;
      CHECK(rank == c.dim() - 1);
    }
  }
}

TEST_CASE("duality is equivariant under unimodular maps") {
  std::mt19937 rng(909);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng() % 2;
    Cone c = random_pointed_cone(rng, n, false);
    Mat g = rand_unimodular(rng, n);
    Mat gti = inverse_unimodular(g).transpose();

    std::vector<Vec> mapped;
    for (const Vec& r : c.generators()) {
      Vec m(n, Int(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[j] += r[i] * g(i, j);
      mapped.push_back(m);
    }
    Cone cg = Cone::from_generators(n, mapped);

    std::vector<Vec> dual_mapped;
    for (const Vec& r : c.dual().generators()) {
      Vec m(n, Int(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[j] += r[i] * gti(i, j);
      dual_mapped.push_back(m);
    }
    CHECK(Cone::from_generators(n, dual_mapped) == cg.dual());
  }
}
