#include "octomaze/discretize.hpp"

namespace octomaze {

Integer subdiv_count(const Direction& d, SlopeClass c) {
  const Integer x = abs(d.dx());
  const Integer y = abs(d.dy());
  const int slope_sign = sign(d.dx()) * sign(d.dy());
  switch (c) {
    case SlopeClass::Vertical: return x;
    case SlopeClass::Horizontal: return y;
    case SlopeClass::DiagUp: return slope_sign > 0 ? Integer(abs(x - y)) : Integer(x + y);
    case SlopeClass::DiagDown: return slope_sign < 0 ? Integer(abs(x - y)) : Integer(x + y);
  }
  return 0;
}

SegmentLattice make_lattice(const Segment& s, std::size_t segment_id, const Direction& family) {
  Integer sub = subdiv_count(family, s.cls);
  if (sub == 0) throw Error(ErrorCode::ParallelIncidence, "family parallel to segment", segment_id);
  SegmentLattice lat;
  lat.segment = segment_id;
  lat.family = family;
  lat.point_count = s.unit_length * sub + 1;
  lat.subdiv = std::move(sub);
  lat.e1 = s.e1;
  lat.e2 = s.e2;
  lat.unit_length = s.unit_length;
  return lat;
}

RatPoint lattice_index_to_point(const SegmentLattice& lat, const Integer& i) {
  if (i < 0 || i >= lat.point_count) throw Error(ErrorCode::IndexOutOfRange, "lattice index " + to_string(i));
  const Integer spans = lat.spans();
  return {Rational(lat.e1.x) + make_rational(i * (lat.e2.x - lat.e1.x), spans),
          Rational(lat.e1.y) + make_rational(i * (lat.e2.y - lat.e1.y), spans)};
}

Integer lattice_point_to_index(const SegmentLattice& lat, const RatPoint& q) {
  const Integer dx = lat.e2.x - lat.e1.x;
  const Integer dy = lat.e2.y - lat.e1.y;
  // Fraction of the way from e1 to e2, read off a coordinate that varies.
  const Rational s = dx != 0 ? Rational((q.x - lat.e1.x) / dx) : Rational((q.y - lat.e1.y) / dy);
  if (q.x != lat.e1.x + s * dx || q.y != lat.e1.y + s * dy || s < 0 || s > 1) {
    throw Error(ErrorCode::NotOnLattice, "point is not on the segment", lat.segment);
  }
  const Rational idx = s * lat.spans();
  if (!is_integer(idx)) throw Error(ErrorCode::NotOnLattice, "point falls between lattice points", lat.segment);
  return idx.get_num();
}

}  // namespace octomaze
