#include "octomaze/pipeline.hpp"

#include "octomaze/accel.hpp"

namespace octomaze {

namespace {

bool same_absorption(const Absorption& a, const Absorption& b) {
  return a.object == b.object && a.segment == b.segment && a.point == b.point && a.incoming_dir == b.incoming_dir &&
         (a.object == AbsorberKind::SegmentSide ? a.side == b.side : a.endpoint == b.endpoint);
}

bool reflective_hit(const Environment& env, const HitResult& h) {
  return h.kind == HitKind::SegmentSide && env.segments[h.segment].reflective(h.side);
}

// Fate of a ray whose next hit `h` does not reflect.
Fate resolve(const HitResult& h, const Direction& incoming, Integer bounces) {
  Fate f;
  f.bounces = std::move(bounces);
  switch (h.kind) {
    case HitKind::SegmentSide:
    case HitKind::SegmentEndpoint: {
      f.kind = FateKind::Absorbed;
      Absorption a;
      a.object = h.kind == HitKind::SegmentSide ? AbsorberKind::SegmentSide : AbsorberKind::SegmentEndpoint;
      a.segment = h.segment;
      a.side = h.side;
      a.endpoint = h.endpoint;
      a.point = h.point;
      a.incoming_dir = incoming;
      f.absorbed = std::move(a);
      break;
    }
    case HitKind::BBox:
      f.kind = FateKind::Escaped;
      f.escape = Escape{h.point, incoming};
      break;
    case HitKind::StartState:
      f.kind = FateKind::ReturnedToStart;
      break;
  }
  return f;
}

}  // namespace

bool operator==(const Fate& a, const Fate& b) {
  if (a.kind != b.kind || a.bounces != b.bounces || a.absorbed.has_value() != b.absorbed.has_value() ||
      a.escape.has_value() != b.escape.has_value()) {
    return false;
  }
  if (a.absorbed && !same_absorption(*a.absorbed, *b.absorbed)) return false;
  if (a.escape && !(a.escape->point == b.escape->point && a.escape->dir == b.escape->dir)) return false;
  return true;
}

Fate trace_fate(const Environment& env, const MazeIET& maze, const TraceOptions& opts) {
  const bool naive = opts.engine == EngineChoice::Naive ||
                     (opts.engine == EngineChoice::Auto && maze.piet.range() <= opts.auto_threshold);
  const NaiveEngine naive_engine(opts.max_naive_steps);
  const AcceleratedEngine accel_engine;
  const IterationEngine& engine = naive ? static_cast<const IterationEngine&>(naive_engine) : accel_engine;

  const PathEnd end = solve_partial(maze.piet, maze.codec.initial_index(), engine);
  const RayState last = maze.codec.decode(end.terminal);
  const HitResult h = next_hit(env, last);
  if (reflective_hit(env, h)) {
    throw Error(ErrorCode::ConstructionInconsistency, "path ended on a reflecting state");
  }
  Fate f = resolve(h, last.dir, end.steps);
  f.engine = std::string(engine.name());
  return f;
}

Fate trace_fate(const Environment& env, const TraceOptions& opts) {
  return trace_fate(env, build_partial_iet(env), opts);
}

namespace {

// Follows the ray until it stops or `limit` bounces have happened.
// Returns true when it stopped.
bool walk(const Environment& env, const Integer& limit, std::vector<RatPoint>* path, Fate& fate) {
  RayState s{to_rational(env.start), env.start_dir, Parity::Plus};
  if (path) path->assign({s.origin});
  Integer bounces = 0;
  for (;;) {
    const HitResult h = next_hit(env, s);
    if (!reflective_hit(env, h)) {
      if (path) path->push_back(h.point);
      fate = resolve(h, s.dir, bounces);
      return true;
    }
    if (bounces == limit) {
      if (path) path->push_back(h.point);
      return false;
    }
    const auto [dir, parity] = reflect(s.dir, s.parity, env.segments[h.segment].cls);
    s = RayState{h.point, dir, parity};
    if (path) path->push_back(h.point);
    ++bounces;
  }
}

}  // namespace

Simulation simulate_geometric(const Environment& env, const Integer& max_steps, bool record_path) {
  Simulation sim;
  if (!walk(env, max_steps, record_path ? &sim.path : nullptr, sim.fate)) {
    throw Error(ErrorCode::StepBudgetExceeded, "simulation exceeded " + to_string(max_steps) + " bounces");
  }
  sim.fate.engine = "simulate";
  return sim;
}

std::vector<RatPoint> ray_polyline(const Environment& env, std::size_t bounce_cap) {
  std::vector<RatPoint> path;
  Fate ignored;
  walk(env, Integer(static_cast<unsigned long>(bounce_cap)), &path, ignored);
  return path;
}

}  // namespace octomaze
