#include "octomaze/geometry.hpp"

#include <algorithm>

namespace octomaze {

std::string_view to_string(SlopeClass c) {
  switch (c) {
    case SlopeClass::Horizontal: return "horizontal";
    case SlopeClass::Vertical: return "vertical";
    case SlopeClass::DiagUp: return "diag_up";
    case SlopeClass::DiagDown: return "diag_down";
  }
  return "?";
}

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Direction::Direction(Integer dx, Integer dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  if (dx_ == 0 && dy_ == 0) throw Error(ErrorCode::ZeroDirection, "direction (0, 0)");
  Integer g = gcd(dx_, dy_);
  if (g != 1) {
    dx_ /= g;
    dy_ /= g;
  }
}

Direction reduce_direction(const Integer& dx, const Integer& dy) { return Direction(dx, dy); }

std::vector<Direction> direction_orbit(const Direction& d) {
  const Integer x = abs(d.dx());
  const Integer y = abs(d.dy());
  const Integer cand[8][2] = {{x, y}, {-x, y}, {x, -y}, {-x, -y}, {y, x}, {-y, x}, {y, -x}, {-y, -x}};
  std::vector<Direction> out;
  for (const auto& c : cand) {
    Direction e(c[0], c[1]);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

bool is_parallel(const Direction& d, SlopeClass c) {
  switch (c) {
    case SlopeClass::Horizontal: return d.dy() == 0;
    case SlopeClass::Vertical: return d.dx() == 0;
    case SlopeClass::DiagUp: return d.dx() == d.dy();
    case SlopeClass::DiagDown: return d.dx() == -d.dy();
  }
  return false;
}

std::pair<Direction, Parity> reflect(const Direction& d, Parity p, SlopeClass c) {
  if (is_parallel(d, c)) throw Error(ErrorCode::ParallelIncidence, "ray runs along the mirror");
  switch (c) {
    case SlopeClass::Vertical: return {Direction(-d.dx(), d.dy()), flip(p)};
    case SlopeClass::Horizontal: return {Direction(d.dx(), -d.dy()), flip(p)};
    case SlopeClass::DiagUp: return {Direction(d.dy(), d.dx()), flip(p)};
    case SlopeClass::DiagDown: return {Direction(-d.dy(), -d.dx()), flip(p)};
  }
  throw Error(ErrorCode::InvalidSlope, "unknown mirror class");
}

Integer cross(const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by) {
  return Integer(ax * by - ay * bx);
}

Rational cross_rational(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return Rational(ax * by - ay * bx);
}

SlopeClass classify_segment(const IntPoint& e1, const IntPoint& e2) {
  const Integer dx = e2.x - e1.x;
  const Integer dy = e2.y - e1.y;
  if (dx == 0 && dy == 0) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  if (dy == 0) return SlopeClass::Horizontal;
  if (dx == 0) return SlopeClass::Vertical;
  if (dx == dy) return SlopeClass::DiagUp;
  if (dx == -dy) return SlopeClass::DiagDown;
  throw Error(ErrorCode::InvalidSlope,
              "segment (" + to_string(e1.x) + "," + to_string(e1.y) + ")-(" + to_string(e2.x) + "," +
                  to_string(e2.y) + ") is not axis-parallel or diagonal");
}

int Segment::side_of(const RatPoint& q) const {
  return sign(cross_rational(Rational(delta_x()), Rational(delta_y()), Rational(q.x - e1.x), Rational(q.y - e1.y)));
}

Side Segment::emanating_side(const Direction& d) const {
  const int s = sign(cross(delta_x(), delta_y(), d.dx(), d.dy()));
  if (s == 0) throw Error(ErrorCode::ParallelIncidence, "direction parallel to segment");
  return s > 0 ? Side::Left : Side::Right;
}

bool operator==(const Segment& a, const Segment& b) {
  return a.e1 == b.e1 && a.e2 == b.e2 && a.cls == b.cls && a.left_reflective == b.left_reflective &&
         a.right_reflective == b.right_reflective && a.unit_length == b.unit_length;
}

Segment make_segment(const IntPoint& e1, const IntPoint& e2, bool left_reflective, bool right_reflective) {
  const SlopeClass cls = classify_segment(e1, e2);
  Integer ul = cls == SlopeClass::Vertical ? Integer(abs(e2.y - e1.y)) : Integer(abs(e2.x - e1.x));
  return Segment{e1, e2, cls, left_reflective, right_reflective, std::move(ul)};
}

namespace {

int orient(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
  return sign(cross(Integer(q.x - p.x), Integer(q.y - p.y), Integer(r.x - p.x), Integer(r.y - p.y)));
}

// r is collinear with p-q; test whether it lies in their bounding box.
bool within(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
  return r.x >= std::min(p.x, q.x) && r.x <= std::max(p.x, q.x) && r.y >= std::min(p.y, q.y) && r.y <= std::max(p.y, q.y);
}

}  // namespace

bool point_on_segment(const IntPoint& q, const Segment& s) { return orient(s.e1, s.e2, q) == 0 && within(s.e1, s.e2, q); }

bool segments_touch(const Segment& a, const Segment& b) {
  const int o1 = orient(a.e1, a.e2, b.e1);
  const int o2 = orient(a.e1, a.e2, b.e2);
  const int o3 = orient(b.e1, b.e2, a.e1);
  const int o4 = orient(b.e1, b.e2, a.e2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within(a.e1, a.e2, b.e1)) return true;
  if (o2 == 0 && within(a.e1, a.e2, b.e2)) return true;
  if (o3 == 0 && within(b.e1, b.e2, a.e1)) return true;
  if (o4 == 0 && within(b.e1, b.e2, a.e2)) return true;
  return false;
}

bool operator==(const Environment& a, const Environment& b) {
  return a.segments == b.segments && a.start == b.start && a.start_dir == b.start_dir && a.bbox == b.bbox &&
         a.bbox_explicit == b.bbox_explicit && a.coord_bound == b.coord_bound;
}

Environment validate_environment(const std::vector<RawSegment>& raw, const IntPoint& start, const Integer& dx,
                                 const Integer& dy, const std::optional<BBox>& bbox) {
  Environment env;
  env.start = start;
  env.start_dir = Direction(dx, dy);
  env.direction_reduced = !(env.start_dir.dx() == dx && env.start_dir.dy() == dy);

  env.segments.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      env.segments.push_back(make_segment(raw[i].e1, raw[i].e2, raw[i].left_reflective, raw[i].right_reflective));
    } catch (const Error& e) {
      throw Error(e.code(), e.message() + " (segment " + std::to_string(i) + ")", i);
    }
  }
  for (std::size_t i = 0; i < env.segments.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (segments_touch(env.segments[i], env.segments[j])) {
        throw Error(ErrorCode::OverlappingSegments,
                    "segments " + std::to_string(j) + " and " + std::to_string(i) + " intersect", i);
      }
    }
    if (point_on_segment(start, env.segments[i])) {
      throw Error(ErrorCode::StartOnSegment, "start lies on segment " + std::to_string(i), i);
    }
  }

  Integer xmin = start.x, xmax = start.x, ymin = start.y, ymax = start.y;
  Integer bound = std::max(Integer(abs(start.x)), Integer(abs(start.y)));
  bound = std::max({bound, Integer(abs(dx)), Integer(abs(dy))});
  for (const auto& s : env.segments) {
    for (const IntPoint* p : {&s.e1, &s.e2}) {
      xmin = std::min(xmin, p->x);
      xmax = std::max(xmax, p->x);
      ymin = std::min(ymin, p->y);
      ymax = std::max(ymax, p->y);
      bound = std::max({bound, Integer(abs(p->x)), Integer(abs(p->y))});
    }
  }
  env.coord_bound = bound;

  if (bbox) {
    env.bbox = *bbox;
    env.bbox_explicit = true;
    if (!env.bbox.strictly_contains(start)) throw Error(ErrorCode::StartOutsideBBox, "start not strictly inside bbox");
    for (std::size_t i = 0; i < env.segments.size(); ++i) {
      if (!env.bbox.strictly_contains(env.segments[i].e1) || !env.bbox.strictly_contains(env.segments[i].e2)) {
        throw Error(ErrorCode::SegmentOutsideBBox, "segment " + std::to_string(i) + " not strictly inside bbox", i);
      }
    }
  } else {
    env.bbox = BBox{xmin - 1, ymin - 1, xmax + 1, ymax + 1};
  }
  return env;
}

}  // namespace octomaze
