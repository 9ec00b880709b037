#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octomaze/envelope.hpp"
#include "octomaze/geometry.hpp"

namespace octomaze {

enum class FateKind { Absorbed, Escaped, ReturnedToStart };
enum class AbsorberKind { SegmentSide, SegmentEndpoint };

struct Absorption {
  AbsorberKind object = AbsorberKind::SegmentSide;
  std::size_t segment = 0;
  Side side = Side::Left;
  int endpoint = 0;
  RatPoint point;
  Direction incoming_dir{1, 0};
};

struct Escape {
  RatPoint point;
  Direction dir{1, 0};
};

struct Fate {
  FateKind kind = FateKind::Escaped;
  Integer bounces;
  std::optional<Absorption> absorbed;
  std::optional<Escape> escape;
  std::string engine;
};

bool operator==(const Fate& a, const Fate& b);

enum class EngineChoice { Naive, Accelerated, Auto };

struct TraceOptions {
  EngineChoice engine = EngineChoice::Auto;
  /// Step budget for the naive engine; unlimited when empty.
  std::optional<Integer> max_naive_steps;
  /// Auto picks naive when the maze range is at most this.
  Integer auto_threshold = Integer(1) << 20;
};

/// Maze -> partial IET -> path end -> one last next_hit.
Fate trace_fate(const Environment& env, const TraceOptions& opts = {});

/// Same, on an already built maze.
Fate trace_fate(const Environment& env, const MazeIET& maze, const TraceOptions& opts = {});

struct Simulation {
  Fate fate;
  /// Start, every bounce point, then where the ray stops or leaves the box.
  std::vector<RatPoint> path;
};

/// One reflection at a time, no IET machinery. StepBudgetExceeded once the
/// bounce count would pass max_steps. Without record_path, `path` stays
/// empty and memory is constant.
Simulation simulate_geometric(const Environment& env, const Integer& max_steps, bool record_path = true);

/// Start, the first min(bounces, cap) bounce points, then the next point
/// the ray reaches. Never fails on long paths.
std::vector<RatPoint> ray_polyline(const Environment& env, std::size_t bounce_cap);

}  // namespace octomaze
