#include <doctest.h>

#include "support.hpp"
#include "zonelab/solve.hpp"

using namespace zonelab;
using namespace zonelab::testsupport;

TEST_CASE("body construction and membership") {
  ConvexBody box = side_box();
  CHECK_FALSE(box.is_empty());
  CHECK(box.contains(v({1, 0})));
  CHECK_FALSE(box.strictly_contains(v({1, 0})));
  RatVec inner_point = {Rat(3, 2), Rat(0)};
  CHECK(box.strictly_contains(inner_point));
  CHECK_FALSE(box.contains(v({0, 0})));

  ConvexBody all = ConvexBody::whole_space(2);
  CHECK(all.is_whole_space());
  CHECK(all.strictly_contains(v({9, -9})));

  ConvexBody empty(
      {ge(v({1}), 1), ge(v({-1}), 0)}, 1);  // x >= 1 and x <= 0
  CHECK(empty.is_empty());

  CHECK_THROWS_AS(ConvexBody({gt(v({1}), 0)}, 1), MalformedInputError);
}

TEST_CASE("classification of the worked instance's faces") {
  Arrangement arr = build_arrangement(axes2(), 2);
  ConvexBody box = side_box();

  auto cls = [&](const char* sv) {
    const Face* f = arr.find(SignVector(sv));
    REQUIRE(f);
    return classify_face(arr, *f, box);
  };

  CHECK(cls("0+") == FaceClass::Outer);   // x=0, y>0 misses the box
  CHECK(cls("+0") == FaceClass::Crossing);  // passes through (3/2, 0)
  CHECK(cls("00") == FaceClass::Outer);
  CHECK(cls("-0") == FaceClass::Outer);
  CHECK(cls("++") == FaceClass::Crossing);
  CHECK(cls("-+") == FaceClass::Outer);
}

TEST_CASE("vertex strictly inside is Inner") {
  Arrangement arr = build_arrangement(axes2(), 2);
  ConvexBody unit = ConvexBody::axis_box(v({-1, -1}), v({1, 1}));
  const Face* origin = arr.find(SignVector("00"));
  REQUIRE(origin);
  CHECK(classify_face(arr, *origin, unit) == FaceClass::Inner);
}

TEST_CASE("classification trichotomy is exhaustive") {
  std::vector<Hyperplane> hs = {h({1, 0}, 0), h({0, 1}, 0), h({1, 1}, 2)};
  Arrangement arr = build_arrangement(hs, 2);
  ConvexBody box = ConvexBody::axis_box(v({-1, -1}), v({1, 1}));
  int outer = 0, crossing = 0, inner = 0;
  for (const Face& f : arr.faces()) {
    switch (classify_face(arr, f, box)) {
      case FaceClass::Outer: ++outer; break;
      case FaceClass::Crossing: ++crossing; break;
      case FaceClass::Inner: ++inner; break;
    }
  }
  CHECK(outer + crossing + inner == static_cast<int>(arr.faces().size()));
  CHECK(outer > 0);
  CHECK(crossing > 0);
  CHECK(inner > 0);  // the origin vertex at least
}

TEST_CASE("empty body classifies everything Outer") {
  Arrangement arr = build_arrangement(axes2(), 2);
  ConvexBody empty({ge(v({1, 0}), 1), ge(v({-1, 0}), 0)}, 2);
  REQUIRE(empty.is_empty());
  for (const Face& f : arr.faces())
    CHECK(classify_face(arr, f, empty) == FaceClass::Outer);
}

TEST_CASE("shrinking the body never turns Outer into Inner") {
  std::vector<Hyperplane> hs = {h({1, 0}, 0), h({0, 1}, 0), h({1, 1}, 2)};
  Arrangement arr = build_arrangement(hs, 2);
  ConvexBody big = ConvexBody::axis_box(v({-2, -2}), v({2, 2}));
  ConvexBody small = ConvexBody::axis_box(v({-1, -1}), v({1, 1}));
  for (const Face& f : arr.faces()) {
    if (classify_face(arr, f, big) == FaceClass::Outer)
      CHECK(classify_face(arr, f, small) != FaceClass::Inner);
  }
}

TEST_CASE("slicing a body by a hyperplane chart") {
  ConvexBody box = side_box();
  SUBCASE("y = 0 leaves the interval [1,2]") {
    Chart chart = chart_of(h({0, 1}, 0));
    ConvexBody sliced = intersect_body_with_flat(box, chart);
    CHECK_FALSE(sliced.is_empty());
    // In chart coordinates t -> (t, 0): [1, 2].
    CHECK(sliced.contains(v({1})));
    CHECK(sliced.contains(v({2})));
    CHECK_FALSE(sliced.contains(v({3})));
    CHECK_FALSE(sliced.contains(v({0})));
  }
  SUBCASE("x = 0 misses the box") {
    Chart chart = chart_of(h({1, 0}, 0));
    CHECK(intersect_body_with_flat(box, chart).is_empty());
  }
  SUBCASE("a halfspace slices to a halfline") {
    ConvexBody half({ge(v({1, 0}), 0)}, 2);
    Chart chart = chart_of(h({0, 1}, 0));
    ConvexBody sliced = intersect_body_with_flat(half, chart);
    CHECK_FALSE(sliced.is_empty());
    CHECK(sliced.contains(v({5})));
    CHECK_FALSE(sliced.contains(v({-1})));
  }
  SUBCASE("an empty body stays empty") {
    ConvexBody empty({ge(v({1, 0}), 1), ge(v({-1, 0}), 0)}, 2);
    Chart chart = chart_of(h({0, 1}, 0));
    CHECK(intersect_body_with_flat(empty, chart).is_empty());
  }
}

TEST_CASE("general position check") {
  SUBCASE("the worked instance is clean") {
    CHECK(general_position_check(axes2(), side_box()).ok());
  }
  SUBCASE("parallel pair violates (a)") {
    std::vector<Hyperplane> hs = {h({1, 0}, 0), h({1, 0}, 1)};
    GpReport rep = general_position_check(hs, side_box());
    REQUIRE_FALSE(rep.ok());
    bool degenerate = false;
    for (const auto& f : rep.findings)
      degenerate |= f.kind == GpViolation::DegenerateSubset;
    CHECK(degenerate);
  }
  SUBCASE("vertex on the body's boundary") {
    GpReport rep = general_position_check(
        axes2(), ConvexBody::axis_box(v({0, 0}), v({1, 1})));
    REQUIRE_FALSE(rep.ok());
    bool vertex_hit = false, tangent = false;
    for (const auto& f : rep.findings) {
      vertex_hit |= f.kind == GpViolation::VertexOnBoundary;
      tangent |= f.kind == GpViolation::FlatTangentToBody;
    }
    CHECK(vertex_hit);
    CHECK(tangent);
  }
  SUBCASE("three concurrent lines violate (b)") {
    std::vector<Hyperplane> hs = {h({1, 0}, 0), h({0, 1}, 0), h({1, 1}, 0)};
    GpReport rep = general_position_check(hs, side_box());
    bool excess = false;
    for (const auto& f : rep.findings)
      excess |= f.kind == GpViolation::ExcessCommonPoint;
    CHECK(excess);
  }
  SUBCASE("tangent flat without a vertex on it") {
    // The line y = 3 grazes the top edge of the box.
    std::vector<Hyperplane> hs = {h({0, 1}, 3)};
    GpReport rep = general_position_check(hs, side_box());
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.findings[0].kind == GpViolation::FlatTangentToBody);
  }
}

TEST_CASE("under general position no vertex is Crossing") {
  std::vector<Hyperplane> hs = {h({1, 0}, 0), h({0, 1}, 0),
                                Hyperplane(v({1, 1}), Rat(1, 2))};
  ConvexBody box = ConvexBody::axis_box(v({-1, -1}), v({1, 1}));
  REQUIRE(general_position_check(hs, box).ok());
  Arrangement arr = build_arrangement(hs, 2);
  for (int idx : arr.faces_of_dim(0))
    CHECK(classify_face(arr, arr.faces()[static_cast<size_t>(idx)], box) !=
          FaceClass::Crossing);
}
