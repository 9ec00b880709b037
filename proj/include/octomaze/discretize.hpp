#pragma once

#include <cstddef>

#include "octomaze/geometry.hpp"

namespace octomaze {

/// Number of equal pieces into which the lines through integer points with
/// direction `d` cut one grid unit of a segment of class `c`: |x| for
/// vertical, |y| for horizontal, ||x|-|y|| for the diagonal whose slope sign
/// matches x*y, |x|+|y| for the other diagonal. Zero means `d` is parallel
/// to `c`.
Integer subdiv_count(const Direction& d, SlopeClass c);

/// Crossings of one direction family with one segment, indexed from e1
/// (index 0) to e2 (index point_count - 1) at equal spacing.
struct SegmentLattice {
  std::size_t segment = 0;
  Direction family{1, 0};
  Integer subdiv;
  Integer point_count;
  IntPoint e1;
  IntPoint e2;
  Integer unit_length;

  /// Number of gaps between consecutive points.
  Integer spans() const { return point_count - 1; }
};

/// Throws ParallelIncidence when the family runs along the segment.
SegmentLattice make_lattice(const Segment& s, std::size_t segment_id, const Direction& family);

RatPoint lattice_index_to_point(const SegmentLattice& lat, const Integer& i);

/// Exact inverse of lattice_index_to_point; NotOnLattice when `q` is off the
/// segment or between lattice points.
Integer lattice_point_to_index(const SegmentLattice& lat, const RatPoint& q);

}  // namespace octomaze
