#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "octomaze/iet.hpp"

namespace octomaze {

/// One side of an abstract edge: slot `slot` (0..2) of triangle `triangle`.
struct EdgeSide {
  std::size_t triangle = 0;
  int slot = 0;
};

inline bool operator==(const EdgeSide& a, const EdgeSide& b) { return a.triangle == b.triangle && a.slot == b.slot; }

/// Slot i runs from corner i to corner i+1. `forward[i]` says whether that
/// traversal agrees with the edge's canonical orientation.
struct SurfaceTriangle {
  std::array<std::size_t, 3> edges{};
  std::array<bool, 3> forward{};
};

struct TriangulatedSurface {
  std::vector<SurfaceTriangle> triangles;
  std::vector<std::array<EdgeSide, 2>> edge_sides;
  std::size_t central_edge = 0;
  /// Side of the central edge through which curves leave it upwards.
  EdgeSide central_up;

  std::size_t edge_count() const { return edge_sides.size(); }
  /// V - E + F, with vertices identified through the edge gluings.
  long euler_characteristic() const;
};

/// Crossing count of the curve with each edge.
struct NormalCoordinates {
  std::vector<Integer> counts;
};

/// Per triangle: each count at most the sum of the other two, even total.
bool coordinates_valid(const TriangulatedSurface& surface, const NormalCoordinates& coords);

/// A crossing of the curve with `edge` (canonical index from the tail),
/// about to enter the triangle on side `entering`.
struct CurvePosition {
  std::size_t edge = 0;
  Integer index;
  EdgeSide entering;
};

inline bool operator==(const CurvePosition& a, const CurvePosition& b) {
  return a.edge == b.edge && a.index == b.index && a.entering == b.entering;
}

/// Suspension of a total IET: a closed surface carrying a normal
/// multicurve whose M crossings on the central edge return to the central
/// edge after exactly `steps_per_eval` segments, at the image crossing.
struct NormalCurveSystem {
  TriangulatedSurface surface;
  NormalCoordinates coords;
  Integer steps_per_eval;
  Integer central_count;
  TotalIET iet;
};

NormalCurveSystem surface_from_iet(const TotalIET& t);

/// Central crossing `x`, heading up.
CurvePosition central_crossing(const NormalCurveSystem& sys, const Integer& x);

/// Follows one curve segment across the triangle being entered.
CurvePosition step_normal_curve(const TriangulatedSurface& surface, const NormalCoordinates& coords,
                                const CurvePosition& pos);

/// Segment-by-segment tracing; linear in `steps`.
CurvePosition trace_normal_curve_stepwise(const NormalCurveSystem& sys, const Integer& start_crossing,
                                          const Integer& steps);

/// Position `steps` segments ahead of central crossing `start_crossing`.
/// Whole turns around the surface are taken with the accelerated iterate,
/// the remainder (< steps_per_eval segments) is walked.
CurvePosition trace_normal_curve(const NormalCurveSystem& sys, const Integer& start_crossing, const Integer& steps);

struct AcceleratedResult {
  Integer value;
  /// Period of x under the map.
  Integer orbit_length;
  std::size_t induction_steps = 0;
};

/// t^(k)(x) by renormalization: repeated first-return induction on a
/// shrinking prefix of the range (Euclid-style batched), recording each
/// induced piece's excursion as a tower over earlier pieces. Once x's tower
/// closes up into a cycle, k is reduced modulo the period and the tower is
/// descended. Cost grows with the number of induction steps, not with M or k.
AcceleratedResult query_accelerated(const TotalIET& t, const Integer& x, const Integer& k);

inline Integer iterate_accelerated(const TotalIET& t, const Integer& x, const Integer& k) {
  return query_accelerated(t, x, k).value;
}

inline Integer orbit_length(const TotalIET& t, const Integer& x) { return query_accelerated(t, x, 0).orbit_length; }

class AcceleratedEngine final : public IterationEngine {
 public:
  Integer iterate(const TotalIET& t, const Integer& x, const Integer& k) const override {
    return iterate_accelerated(t, x, k);
  }
  std::string_view name() const override { return "accel"; }
};

}  // namespace octomaze
