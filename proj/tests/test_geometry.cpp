#include <doctest.h>

#include <array>

#include "octomaze/geometry.hpp"

using namespace octomaze;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SyntaxError;
}

const std::vector<SlopeClass> kClasses{SlopeClass::Horizontal, SlopeClass::Vertical, SlopeClass::DiagUp,
                                       SlopeClass::DiagDown};

}  // namespace

TEST_CASE("directions are stored reduced") {
  CHECK(Direction(4, 6) == Direction(2, 3));
  CHECK(Direction(0, -5) == Direction(0, -1));
  CHECK(Direction(5, 3).dx() == 5);
  CHECK(Direction(-6, -4) == Direction(-3, -2));
  CHECK(code_of([] { Direction(0, 0); }) == ErrorCode::ZeroDirection);
  const Integer big = Integer(1) << 200;
  CHECK(Direction(big * 3, big * 7) == Direction(3, 7));
}

TEST_CASE("orbits have eight members, or four when axis-parallel or diagonal") {
  CHECK(direction_orbit(Direction(5, 3)).size() == 8);
  CHECK(direction_orbit(Direction(0, 1)).size() == 4);
  CHECK(direction_orbit(Direction(-1, 1)).size() == 4);
}

TEST_CASE("reflection examples") {
  CHECK(reflect(Direction(5, 3), Parity::Plus, SlopeClass::Vertical) == std::pair{Direction(-5, 3), Parity::Minus});
  CHECK(reflect(Direction(5, 3), Parity::Plus, SlopeClass::DiagUp) == std::pair{Direction(3, 5), Parity::Minus});
  CHECK(reflect(Direction(5, 3), Parity::Plus, SlopeClass::DiagDown) == std::pair{Direction(-3, -5), Parity::Minus});
  CHECK(reflect(Direction(5, 3), Parity::Minus, SlopeClass::Horizontal) == std::pair{Direction(5, -3), Parity::Plus});
  CHECK(code_of([] { reflect(Direction(1, 1), Parity::Plus, SlopeClass::DiagUp); }) == ErrorCode::ParallelIncidence);
  CHECK(code_of([] { reflect(Direction(0, 2), Parity::Plus, SlopeClass::Vertical); }) == ErrorCode::ParallelIncidence);
}

TEST_CASE("reflection maps the integer lattice onto itself") {
  // Mirror matrices (a b; c d) per class; integer with determinant -1.
  const std::vector<std::array<long, 4>> mats{{1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0}};
  for (std::size_t k = 0; k < kClasses.size(); ++k) {
    const auto [a, b, c, d] = mats[k];
    CHECK(a * d - b * c == -1);
    for (long px = -2; px <= 2; ++px) {
      for (long py = -2; py <= 2; ++py) {
        if (px == 0 && py == 0) continue;
        const Direction v(px, py);
        if (is_parallel(v, kClasses[k])) continue;
        CHECK(reflect(v, Parity::Plus, kClasses[k]).first == Direction(a * px + b * py, c * px + d * py));
      }
    }
  }
}

TEST_CASE("segment classification") {
  CHECK(classify_segment({0, 0}, {3, 3}) == SlopeClass::DiagUp);
  CHECK(classify_segment({0, 0}, {0, 7}) == SlopeClass::Vertical);
  CHECK(classify_segment({4, 0}, {0, 0}) == SlopeClass::Horizontal);
  CHECK(classify_segment({0, 3}, {3, 0}) == SlopeClass::DiagDown);
  CHECK(code_of([] { classify_segment({1, 1}, {4, 2}); }) == ErrorCode::InvalidSlope);
  CHECK(code_of([] { classify_segment({1, 1}, {1, 1}); }) == ErrorCode::DegenerateSegment);
}

TEST_CASE("left and right half-planes partition the plane off the line") {
  const Segment s = make_segment({0, 0}, {4, 4}, true, false);
  CHECK(s.unit_length == 4);
  for (long x = -3; x <= 6; ++x) {
    for (long y = -3; y <= 6; ++y) {
      const int side = s.side_of({Rational(x), Rational(y)});
      CHECK((side == 0) == (x == y));
      if (x != y) CHECK(side == (y > x ? 1 : -1));
    }
  }
  CHECK(s.emanating_side(Direction(-1, 1)) == Side::Left);
  CHECK(s.emanating_side(Direction(1, -1)) == Side::Right);
  CHECK(make_segment({0, 5}, {0, 0}, true, true).unit_length == 5);
}

TEST_CASE("environment validation") {
  SUBCASE("automatic box is the hull grown by one") {
    const Environment env = validate_environment({{{0, 0}, {0, 4}}, {{3, 1}, {5, 1}}}, {1, 2}, 2, 4);
    CHECK(env.bbox == BBox{-1, -1, 6, 5});
    CHECK(env.start_dir == Direction(1, 2));
    CHECK(env.direction_reduced);
    CHECK_FALSE(env.bbox_explicit);
  }
  SUBCASE("shared endpoint") {
    CHECK(code_of([] { validate_environment({{{0, 0}, {0, 4}}, {{0, 4}, {3, 4}}}, {1, 1}, 1, 0); }) ==
          ErrorCode::OverlappingSegments);
  }
  SUBCASE("crossing segments") {
    CHECK(code_of([] { validate_environment({{{0, 0}, {4, 4}}, {{0, 4}, {4, 0}}}, {1, 3}, 1, 0); }) ==
          ErrorCode::OverlappingSegments);
  }
  SUBCASE("start on a segment") {
    CHECK(code_of([] { validate_environment({{{0, 0}, {4, 4}}}, {2, 2}, 1, 0); }) == ErrorCode::StartOnSegment);
  }
  SUBCASE("explicit box") {
    CHECK(code_of([] { validate_environment({}, {5, 0}, 1, 0, BBox{0, -1, 5, 1}); }) == ErrorCode::StartOutsideBBox);
    CHECK(code_of([] { validate_environment({{{0, 0}, {9, 0}}}, {1, 1}, 1, 0, BBox{-1, -1, 9, 5}); }) ==
          ErrorCode::SegmentOutsideBBox);
  }
  SUBCASE("zero direction and bad slope carry the segment index") {
    CHECK(code_of([] { validate_environment({}, {0, 0}, 0, 0); }) == ErrorCode::ZeroDirection);
    try {
      validate_environment({{{0, 0}, {0, 1}}, {{5, 5}, {7, 6}}}, {3, 3}, 1, 0);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidSlope);
      CHECK(e.item() == std::optional<std::size_t>{1});
    }
  }
}
