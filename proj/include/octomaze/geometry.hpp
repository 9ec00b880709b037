#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "octomaze/errors.hpp"
#include "octomaze/numeric.hpp"

namespace octomaze {

enum class Parity : std::uint8_t { Plus, Minus };

constexpr Parity flip(Parity p) { return p == Parity::Plus ? Parity::Minus : Parity::Plus; }
constexpr int parity_sign(Parity p) { return p == Parity::Plus ? 1 : -1; }

/// Horizontal, vertical, slope +1 or slope -1.
enum class SlopeClass : std::uint8_t { Horizontal, Vertical, DiagUp, DiagDown };

std::string_view to_string(SlopeClass c);

enum class Side : std::uint8_t { Left, Right };

std::string_view to_string(Side s);

/// Nonzero integer vector kept in lowest terms.
class Direction {
 public:
  /// Divides out gcd(|dx|, |dy|); throws ZeroDirection for (0, 0).
  Direction(Integer dx, Integer dy);

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }

  Direction operator-() const { return Direction(-dx_, -dy_); }

  friend bool operator==(const Direction& a, const Direction& b) { return a.dx_ == b.dx_ && a.dy_ == b.dy_; }

 private:
  Integer dx_;
  Integer dy_;
};

Direction reduce_direction(const Integer& dx, const Integer& dy);

/// {(±x,±y), (±y,±x)} in a fixed order: base (|x|,|y|) with the sign and
/// swap variants enumerated x-sign first, duplicates dropped. 8 members, or
/// 4 for axis-parallel and diagonal bases.
std::vector<Direction> direction_orbit(const Direction& d);

bool is_parallel(const Direction& d, SlopeClass c);

/// Mirror image of `d` in a mirror of class `c`; parity always flips.
/// Throws ParallelIncidence when `d` runs along the mirror.
std::pair<Direction, Parity> reflect(const Direction& d, Parity p, SlopeClass c);

Integer cross(const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by);
Rational cross_rational(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by);

SlopeClass classify_segment(const IntPoint& e1, const IntPoint& e2);

struct Segment {
  IntPoint e1;
  IntPoint e2;
  SlopeClass cls;
  bool left_reflective;
  bool right_reflective;
  /// |dx| for non-vertical segments, |dy| for vertical ones.
  Integer unit_length;

  Integer delta_x() const { return e2.x - e1.x; }
  Integer delta_y() const { return e2.y - e1.y; }

  /// +1 on the left (cross(e2 - e1, q - e1) > 0), -1 on the right, 0 on the line.
  int side_of(const RatPoint& q) const;

  /// Half-plane a ray with direction `d` enters when it leaves the line.
  /// `d` must not be parallel to the segment.
  Side emanating_side(const Direction& d) const;

  bool reflective(Side s) const { return s == Side::Left ? left_reflective : right_reflective; }
};

bool operator==(const Segment& a, const Segment& b);

Segment make_segment(const IntPoint& e1, const IntPoint& e2, bool left_reflective, bool right_reflective);

/// Closed segments share at least one point.
bool segments_touch(const Segment& a, const Segment& b);
bool point_on_segment(const IntPoint& q, const Segment& s);

struct BBox {
  Integer xmin;
  Integer ymin;
  Integer xmax;
  Integer ymax;

  bool strictly_contains(const IntPoint& p) const {
    return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
  }
};

inline bool operator==(const BBox& a, const BBox& b) {
  return a.xmin == b.xmin && a.ymin == b.ymin && a.xmax == b.xmax && a.ymax == b.ymax;
}

struct RawSegment {
  IntPoint e1;
  IntPoint e2;
  bool left_reflective = true;
  bool right_reflective = true;
};

struct Environment {
  std::vector<Segment> segments;
  IntPoint start;
  Direction start_dir{1, 0};
  BBox bbox;
  bool bbox_explicit = false;
  /// The given direction had a common factor and was divided through.
  bool direction_reduced = false;
  Integer coord_bound;
};

bool operator==(const Environment& a, const Environment& b);

/// Checks classification, pairwise disjointness (endpoints included), and
/// containment. Without an explicit box, the box is the hull of all segments
/// and the start grown by one unit on each side.
Environment validate_environment(const std::vector<RawSegment>& raw, const IntPoint& start, const Integer& dx,
                                 const Integer& dy, const std::optional<BBox>& bbox = std::nullopt);

struct RayState {
  RatPoint origin;
  Direction dir;
  Parity parity = Parity::Plus;
};

inline bool operator==(const RayState& a, const RayState& b) {
  return a.origin == b.origin && a.dir == b.dir && a.parity == b.parity;
}

}  // namespace octomaze
