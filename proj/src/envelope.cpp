#include "octomaze/envelope.hpp"

#include <algorithm>
#include <array>

namespace octomaze {

namespace {

Rational dot(const Rational& ax, const Rational& ay, const Integer& bx, const Integer& by) {
  return Rational(ax * bx + ay * by);
}

}  // namespace

HitResult next_hit(const Environment& env, const RayState& s) {
  const Integer& dx = s.dir.dx();
  const Integer& dy = s.dir.dy();
  const RatPoint& o = s.origin;
  const Integer dd = dx * dx + dy * dy;

  std::optional<HitResult> best;
  auto consider = [&](HitResult h) {
    if (h.param > 0 && (!best || h.param < best->param)) best = std::move(h);
  };
  auto at = [&](const Rational& tau) { return RatPoint{o.x + tau * dx, o.y + tau * dy}; };

  for (std::size_t i = 0; i < env.segments.size(); ++i) {
    const Segment& seg = env.segments[i];
    const Integer ex = seg.delta_x();
    const Integer ey = seg.delta_y();
    const Rational wx = seg.e1.x - o.x;
    const Rational wy = seg.e1.y - o.y;
    const Integer denom = cross(dx, dy, ex, ey);
    if (denom != 0) {
      const Rational tau = Rational(wx * ey - wy * ex) / denom;
      if (tau <= 0) continue;
      const Rational mu = Rational(wx * dy - wy * dx) / denom;
      if (mu < 0 || mu > 1) continue;
      HitResult h;
      h.segment = i;
      h.param = tau;
      if (mu == 0 || mu == 1) {
        h.kind = HitKind::SegmentEndpoint;
        h.endpoint = mu == 0 ? 1 : 2;
        h.point = to_rational(mu == 0 ? seg.e1 : seg.e2);
      } else {
        h.kind = HitKind::SegmentSide;
        // Heading into the left half-plane means arriving from the right.
        h.side = denom > 0 ? Side::Left : Side::Right;
        h.point = at(tau);
      }
      consider(std::move(h));
    } else if (wx * dy - wy * dx == 0) {
      for (int e = 1; e <= 2; ++e) {
        const IntPoint& p = e == 1 ? seg.e1 : seg.e2;
        HitResult h;
        h.kind = HitKind::SegmentEndpoint;
        h.segment = i;
        h.endpoint = e;
        h.point = to_rational(p);
        h.param = dot(p.x - o.x, p.y - o.y, dx, dy) / dd;
        consider(std::move(h));
      }
    }
  }

  if (s.dir == env.start_dir) {
    const Rational wx = env.start.x - o.x;
    const Rational wy = env.start.y - o.y;
    if (wx * dy - wy * dx == 0) {
      HitResult h;
      h.kind = HitKind::StartState;
      h.point = to_rational(env.start);
      h.param = dot(wx, wy, dx, dy) / dd;
      consider(std::move(h));
    }
  }

  const BBox& box = env.bbox;
  std::optional<Rational> exit;
  if (dx != 0) exit = (Rational(dx > 0 ? box.xmax : box.xmin) - o.x) / dx;
  if (dy != 0) {
    const Rational ty = (Rational(dy > 0 ? box.ymax : box.ymin) - o.y) / dy;
    if (!exit || ty < *exit) exit = ty;
  }
  if (!best || *exit < best->param) {
    HitResult h;
    h.kind = HitKind::BBox;
    h.param = *exit;
    h.point = at(*exit);
    best = std::move(h);
  }
  return *best;
}

ValueCodec::ValueCodec(std::vector<CodecBlock> blocks, RayState initial, std::size_t segment_count)
    : blocks_(std::move(blocks)), by_segment_(segment_count), initial_(std::move(initial)) {
  Integer cursor = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    blocks_[i].start = cursor;
    cursor += blocks_[i].length();
    by_segment_[blocks_[i].segment].push_back(i);
  }
  initial_index_ = cursor;
  size_ = cursor + 1;
}

const CodecBlock* ValueCodec::find_block(std::size_t segment, const Direction& dir, Parity parity) const {
  if (segment >= by_segment_.size()) return nullptr;
  for (std::size_t i : by_segment_[segment]) {
    if (blocks_[i].dir == dir && blocks_[i].parity == parity) return &blocks_[i];
  }
  return nullptr;
}

const CodecBlock& ValueCodec::block_of(const Integer& v) const {
  if (v < 0 || v >= initial_index_) throw Error(ErrorCode::OutOfRange, "value " + to_string(v) + " is not in a block");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), v,
                             [](const Integer& x, const CodecBlock& b) { return x < b.start; });
  return *std::prev(it);
}

RayState ValueCodec::decode(const Integer& v) const {
  if (v == initial_index_) return initial_;
  const CodecBlock& b = block_of(v);
  return {lattice_index_to_point(b.lattice, b.lattice_index(v - b.start)), b.dir, b.parity};
}

std::optional<Integer> ValueCodec::encode(std::size_t segment, const RatPoint& q, const Direction& dir,
                                          Parity parity) const {
  const CodecBlock* b = find_block(segment, dir, parity);
  if (!b) return std::nullopt;
  const Integer p = lattice_point_to_index(b->lattice, q);
  return Integer(b->start + b->lattice_index(p));
}

bool ValueCodec::is_endpoint_value(const Integer& v) const {
  if (v == initial_index_) return false;
  const CodecBlock& b = block_of(v);
  const Integer i = v - b.start;
  return i == 0 || i == b.length() - 1;
}

ValueCodec build_value_codec(const Environment& env) {
  std::vector<CodecBlock> blocks;
  const std::vector<Direction> orbit = direction_orbit(env.start_dir);
  for (std::size_t s = 0; s < env.segments.size(); ++s) {
    const Segment& seg = env.segments[s];
    for (const Direction& d : orbit) {
      if (is_parallel(d, seg.cls) || !seg.reflective(seg.emanating_side(d))) continue;
      const int lateral = sign(cross(d.dx(), d.dy(), seg.delta_x(), seg.delta_y()));
      for (Parity p : {Parity::Plus, Parity::Minus}) {
        CodecBlock b;
        b.segment = s;
        b.dir = d;
        b.parity = p;
        b.lattice = make_lattice(seg, s, d);
        b.along = parity_sign(p) * lateral > 0;
        blocks.push_back(std::move(b));
      }
    }
  }
  return ValueCodec(std::move(blocks), RayState{to_rational(env.start), env.start_dir, Parity::Plus},
                    env.segments.size());
}

namespace {

bool same_target(const HitResult& a, const HitResult& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case HitKind::SegmentSide: return a.segment == b.segment && a.side == b.side;
    case HitKind::SegmentEndpoint: return a.segment == b.segment && a.endpoint == b.endpoint;
    case HitKind::BBox:
    case HitKind::StartState: return true;
  }
  return false;
}

class MazeBuilder {
 public:
  MazeBuilder(const Environment& env, MazeIET& out) : env_(env), out_(out) {}

  void add_initial() {
    const Integer& v = out_.codec.initial_index();
    const RayState s = out_.codec.initial_state();
    const HitResult h = next_hit(env_, s);
    if (auto img = reflected_value(s, h)) pieces_.push_back({{v, v}, *img - v});
  }

  void add_block(const CodecBlock& b) {
    const Integer spans = b.lattice.spans();
    if (spans < 2) return;
    const IntPoint& first = b.along ? b.lattice.e1 : b.lattice.e2;
    const IntPoint& last = b.along ? b.lattice.e2 : b.lattice.e1;
    const Integer& dx = b.dir.dx();
    const Integer& dy = b.dir.dy();
    const Integer w_first = cross(dx, dy, first.x, first.y);
    const Integer w_step = cross(dx, dy, last.x, last.y) - w_first;

    // Block positions (in units of lattice steps) where the lateral
    // coordinate passes something that can change the next hit.
    std::vector<Rational> cuts;
    auto cut_at = [&](const Integer& px, const Integer& py) {
      Rational c = make_rational(spans * (cross(dx, dy, px, py) - w_first), w_step);
      if (c > 0 && c < spans) cuts.push_back(std::move(c));
    };
    for (const Segment& s : env_.segments) {
      cut_at(s.e1.x, s.e1.y);
      cut_at(s.e2.x, s.e2.y);
    }
    const BBox& box = env_.bbox;
    cut_at(box.xmin, box.ymin);
    cut_at(box.xmin, box.ymax);
    cut_at(box.xmax, box.ymin);
    cut_at(box.xmax, box.ymax);
    if (b.dir == env_.start_dir) cut_at(env_.start.x, env_.start.y);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Integer cursor = 1;
    for (const Rational& c : cuts) {
      const Integer below = is_integer(c) ? Integer(c.get_num() - 1) : floor(c);
      if (below >= cursor) run(b, cursor, below);
      if (is_integer(c)) run(b, c.get_num(), c.get_num());
      cursor = floor(c) + 1;
    }
    if (cursor <= spans - 1) run(b, cursor, spans - 1);
  }

  void finish() {
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.src.lo < b.src.lo; });
    std::vector<Piece> merged;
    for (Piece& p : pieces_) {
      if (!merged.empty() && merged.back().src.hi + 1 == p.src.lo && merged.back().offset == p.offset) {
        merged.back().src.hi = p.src.hi;
      } else {
        merged.push_back(std::move(p));
      }
    }
    try {
      out_.piet = PartialIET(out_.codec.size(), std::move(merged));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConstructionInconsistency, e.message());
    }
  }

 private:
  std::optional<Integer> reflected_value(const RayState& s, const HitResult& h) const {
    if (h.kind != HitKind::SegmentSide) return std::nullopt;
    const Segment& target = env_.segments[h.segment];
    if (!target.reflective(h.side)) return std::nullopt;
    const auto [dir, parity] = reflect(s.dir, s.parity, target.cls);
    auto v = out_.codec.encode(h.segment, h.point, dir, parity);
    if (!v) throw Error(ErrorCode::ConstructionInconsistency, "reflected ray has no block");
    return v;
  }

  // Block indices lo..hi all see the same object.
  void run(const CodecBlock& b, const Integer& lo, const Integer& hi) {
    const Integer v_lo = b.start + lo;
    const Integer v_hi = b.start + hi;
    const RayState s_lo = out_.codec.decode(v_lo);
    const HitResult h_lo = next_hit(env_, s_lo);
    if (h_lo.kind == HitKind::StartState) {
      out_.carve_log.push_back(v_lo);
      return;
    }
    const auto img_lo = reflected_value(s_lo, h_lo);
    if (lo == hi) {
      if (img_lo) pieces_.push_back({{v_lo, v_lo}, *img_lo - v_lo});
      return;
    }
    const RayState s_hi = out_.codec.decode(v_hi);
    const HitResult h_hi = next_hit(env_, s_hi);
    if (!same_target(h_lo, h_hi)) {
      throw Error(ErrorCode::ConstructionInconsistency, "run [" + to_string(v_lo) + "," + to_string(v_hi) +
                                                            "] does not see a single object");
    }
    if (!img_lo) return;
    const auto img_hi = reflected_value(s_hi, h_hi);
    if (*img_hi - *img_lo != v_hi - v_lo) {
      throw Error(ErrorCode::ConstructionInconsistency,
                  "run [" + to_string(v_lo) + "," + to_string(v_hi) + "] is not a translation");
    }
    pieces_.push_back({{v_lo, v_hi}, *img_lo - v_lo});
  }

  const Environment& env_;
  MazeIET& out_;
  std::vector<Piece> pieces_;
};

}  // namespace

MazeIET build_partial_iet(const Environment& env) {
  MazeIET maze;
  maze.codec = build_value_codec(env);
  MazeBuilder builder(env, maze);
  builder.add_initial();
  for (const CodecBlock& b : maze.codec.blocks()) builder.add_block(b);
  builder.finish();
  return maze;
}

}  // namespace octomaze
