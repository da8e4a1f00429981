#include <doctest.h>

#include "support.hpp"
#include "zonelab/instance_gen.hpp"
#include "zonelab/instance_io.hpp"

using namespace zonelab;
using namespace zonelab::testsupport;

TEST_CASE("identical configs generate byte-identical instances") {
  GenConfig cfg;
  cfg.seed = 7;
  cfg.n = 3;
  cfg.d = 2;
  cfg.coeff_bound = 10;
  cfg.body_facets = 4;

  Instance a = generate_instance(cfg);
  Instance b = generate_instance(cfg);
  CHECK(instance_to_json(a) == instance_to_json(b));
  REQUIRE(a.hyperplanes.size() == 3);

  GenConfig other = cfg;
  other.seed = 8;
  CHECK(instance_to_json(generate_instance(other)) != instance_to_json(a));
}

TEST_CASE("generated hyperplanes are distinct, canonical, within bounds") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.n = 10;
  cfg.d = 3;
  cfg.coeff_bound = 8;
  std::vector<Hyperplane> hs = random_hyperplanes(cfg);
  REQUIRE(hs.size() == 10);
  for (size_t i = 0; i < hs.size(); ++i) {
    CHECK_FALSE(is_zero_vec(hs[i].normal()));
    for (size_t j = i + 1; j < hs.size(); ++j) CHECK(hs[i] != hs[j]);
  }
}

TEST_CASE("n = 0 yields an empty list") {
  GenConfig cfg;
  cfg.n = 0;
  cfg.d = 2;
  CHECK(random_hyperplanes(cfg).empty());
}

TEST_CASE("a starved generator reports failure") {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.n = 100;
  cfg.d = 1;
  cfg.coeff_bound = 1;  // only a handful of distinct canonical points exist
  CHECK_THROWS_AS(random_hyperplanes(cfg), GenerationError);
}

TEST_CASE("generated bodies are never empty") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.d = 2 + static_cast<int>(seed % 2);
    cfg.body_facets = 1 + static_cast<int>(seed % 5);
    ConvexBody body = random_body(cfg);
    CHECK_FALSE(body.is_empty());
  }
}

TEST_CASE("a single halfspace body is legal (unbounded)") {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.d = 2;
  cfg.body_facets = 1;
  ConvexBody body = random_body(cfg);
  CHECK_FALSE(body.is_empty());
  CHECK(body.halfspaces().size() == 1);
}

TEST_CASE("perturb is a no-op on instances already in general position") {
  std::vector<Hyperplane> hs = axes2();
  ConvexBody box = side_box();
  REQUIRE(general_position_check(hs, box).ok());
  std::vector<Hyperplane> out = perturb(hs, box, 1024, 5);
  CHECK(out == hs);
}

TEST_CASE("perturb moves a vertex off the body's boundary") {
  std::vector<Hyperplane> hs = axes2();
  ConvexBody corner = ConvexBody::axis_box(v({0, 0}), v({1, 1}));
  REQUIRE_FALSE(general_position_check(hs, corner).ok());

  std::vector<Hyperplane> moved = perturb(hs, corner, 1024, 5);
  CHECK(general_position_check(moved, corner).ok());
  CHECK(moved != hs);

  // Determinism: the same seed reproduces the same displacement.
  std::vector<Hyperplane> again = perturb(hs, corner, 1024, 5);
  CHECK(moved == again);
}

TEST_CASE("perturb untangles concurrent lines") {
  std::vector<Hyperplane> hs = {h({1, 0}, 0), h({0, 1}, 0), h({1, 1}, 0),
                                h({1, -1}, 0)};
  ConvexBody box = ConvexBody::axis_box(v({2, 2}), v({3, 3}));
  std::vector<Hyperplane> moved = perturb(hs, box, 1 << 10, 99);
  CHECK(general_position_check(moved, box).ok());
}

TEST_CASE("bounded draws are within range and deterministic") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    long x = a.uniform(-7, 7);
    CHECK(x >= -7);
    CHECK(x <= 7);
    CHECK(x == b.uniform(-7, 7));
  }
}
