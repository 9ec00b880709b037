#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "octomaze/discretize.hpp"
#include "octomaze/geometry.hpp"
#include "octomaze/iet.hpp"

namespace octomaze {

enum class HitKind { SegmentSide, SegmentEndpoint, BBox, StartState };

/// First thing a ray meets strictly after its origin. `side` is the side of
/// the segment the ray arrives on; `endpoint` is 1 or 2.
struct HitResult {
  HitKind kind = HitKind::BBox;
  std::size_t segment = 0;
  Side side = Side::Left;
  int endpoint = 0;
  RatPoint point;
  /// point = origin + param * dir.
  Rational param;
};

/// Exact, no tolerances. A ray running along a segment's line stops at the
/// first endpoint it reaches. The start point only counts when the ray
/// passes it in the start direction.
HitResult next_hit(const Environment& env, const RayState& s);

/// Values leaving one reflective side of one segment in one direction with
/// one parity. Block index i is lattice index i when `along` holds, else
/// lattice index point_count-1-i; either way indices increase with
/// parity_sign * cross(dir, point).
struct CodecBlock {
  std::size_t segment = 0;
  Direction dir{1, 0};
  Parity parity = Parity::Plus;
  Integer start;
  SegmentLattice lattice;
  bool along = true;

  const Integer& length() const { return lattice.point_count; }
  Integer lattice_index(const Integer& block_index) const {
    return along ? block_index : Integer(lattice.point_count - 1 - block_index);
  }
};

/// Bijection between [0, M) and ray states: blocks tile [0, M-1), M-1 is
/// the initial ray.
class ValueCodec {
 public:
  ValueCodec() = default;
  ValueCodec(std::vector<CodecBlock> blocks, RayState initial, std::size_t segment_count);

  const std::vector<CodecBlock>& blocks() const { return blocks_; }
  const Integer& size() const { return size_; }
  const Integer& initial_index() const { return initial_index_; }
  const RayState& initial_state() const { return initial_; }

  const CodecBlock* find_block(std::size_t segment, const Direction& dir, Parity parity) const;
  /// Block holding value v; v must not be the initial index.
  const CodecBlock& block_of(const Integer& v) const;

  RayState decode(const Integer& v) const;
  /// nullopt when there is no block for (segment, dir, parity).
  std::optional<Integer> encode(std::size_t segment, const RatPoint& q, const Direction& dir, Parity parity) const;
  /// Segment endpoints: present in blocks but never a live ray state.
  bool is_endpoint_value(const Integer& v) const;

 private:
  std::vector<CodecBlock> blocks_;
  std::vector<std::vector<std::size_t>> by_segment_;
  RayState initial_{{}, Direction{1, 0}, Parity::Plus};
  Integer initial_index_;
  Integer size_;
};

/// Blocks ordered by segment, then direction orbit order, then Plus before
/// Minus; only sides that reflect get blocks.
ValueCodec build_value_codec(const Environment& env);

struct MazeIET {
  ValueCodec codec;
  PartialIET piet;
  /// Values removed because their ray passes back through the start in the
  /// start direction.
  std::vector<Integer> carve_log;
};

/// Partial IET equivalent to the maze: v is in the domain iff its ray next
/// meets a reflective side, and then f(v) encodes the reflected ray. Each
/// block is cut at the lateral positions of every endpoint, box corner and
/// the start, and each run is checked to be a translation. Violations raise
/// ConstructionInconsistency.
MazeIET build_partial_iet(const Environment& env);

}  // namespace octomaze
