#include <algorithm>
#include <numeric>

#include "octomaze/accel.hpp"

namespace octomaze {

long TriangulatedSurface::euler_characteristic() const {
  // Corner c of triangle t is node 3t + c.
  std::vector<std::size_t> parent(triangles.size() * 3);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto tail_head = [&](const EdgeSide& s) {
    const std::size_t c0 = 3 * s.triangle + static_cast<std::size_t>(s.slot);
    const std::size_t c1 = 3 * s.triangle + static_cast<std::size_t>((s.slot + 1) % 3);
    return triangles[s.triangle].forward[static_cast<std::size_t>(s.slot)] ? std::pair{c0, c1} : std::pair{c1, c0};
  };
  for (const auto& sides : edge_sides) {
    auto [t0, h0] = tail_head(sides[0]);
    auto [t1, h1] = tail_head(sides[1]);
    unite(t0, t1);
    unite(h0, h1);
  }
  long vertices = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) vertices += find(v) == v ? 1 : 0;
  return vertices - static_cast<long>(edge_sides.size()) + static_cast<long>(triangles.size());
}

bool coordinates_valid(const TriangulatedSurface& surface, const NormalCoordinates& coords) {
  if (coords.counts.size() != surface.edge_count()) return false;
  for (const auto& tri : surface.triangles) {
    const Integer& a = coords.counts[tri.edges[0]];
    const Integer& b = coords.counts[tri.edges[1]];
    const Integer& c = coords.counts[tri.edges[2]];
    if (a < 0 || b < 0 || c < 0) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
    if (!mpz_even_p(Integer(a + b + c).get_mpz_t())) return false;
  }
  return true;
}

namespace {

class SurfaceBuilder {
 public:
  std::size_t edge(Integer count) {
    counts_.push_back(std::move(count));
    sides_.emplace_back();
    filled_.push_back(0);
    return counts_.size() - 1;
  }

  std::size_t triangle(std::array<std::size_t, 3> edges, std::array<bool, 3> forward) {
    const std::size_t t = tris_.size();
    tris_.push_back({edges, forward});
    for (int s = 0; s < 3; ++s) {
      const std::size_t e = edges[static_cast<std::size_t>(s)];
      sides_[e][filled_[e]++] = EdgeSide{t, s};
    }
    return t;
  }

  const Integer& count(std::size_t e) const { return counts_[e]; }

  // Chain edges lo..hi-1 hang below `base` (canonical left to right along
  // the top of the suspension); split in halves so every chain edge sits at
  // the same depth.
  void split_top(std::size_t base, const std::vector<std::size_t>& chain, std::size_t lo, std::size_t hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::size_t x = mid - lo == 1 ? chain[lo] : edge(sum(chain, lo, mid));
    const std::size_t y = hi - mid == 1 ? chain[mid] : edge(sum(chain, mid, hi));
    triangle({base, y, x}, {true, false, false});
    if (mid - lo > 1) split_top(x, chain, lo, mid);
    if (hi - mid > 1) split_top(y, chain, mid, hi);
  }

  void split_bottom(std::size_t base, const std::vector<std::size_t>& chain, std::size_t lo, std::size_t hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::size_t x = mid - lo == 1 ? chain[lo] : edge(sum(chain, lo, mid));
    const std::size_t y = hi - mid == 1 ? chain[mid] : edge(sum(chain, mid, hi));
    triangle({x, y, base}, {true, true, false});
    if (mid - lo > 1) split_bottom(x, chain, lo, mid);
    if (hi - mid > 1) split_bottom(y, chain, mid, hi);
  }

  TriangulatedSurface finish(std::size_t central, NormalCoordinates& coords) {
    for (std::size_t e = 0; e < filled_.size(); ++e) {
      if (filled_[e] != 2) throw Error(ErrorCode::ConstructionInconsistency, "edge not glued on both sides");
    }
    TriangulatedSurface s;
    s.triangles = std::move(tris_);
    s.edge_sides = std::move(sides_);
    s.central_edge = central;
    s.central_up = s.edge_sides[central][0];
    coords.counts = std::move(counts_);
    return s;
  }

 private:
  Integer sum(const std::vector<std::size_t>& chain, std::size_t lo, std::size_t hi) const {
    Integer total = 0;
    for (std::size_t i = lo; i < hi; ++i) total += counts_[chain[i]];
    return total;
  }

  std::vector<Integer> counts_;
  std::vector<std::array<EdgeSide, 2>> sides_;
  std::vector<int> filled_;
  std::vector<SurfaceTriangle> tris_;
};

}  // namespace

NormalCurveSystem surface_from_iet(const TotalIET& t) {
  const Integer& M = t.range();
  const auto& pieces = t.pieces();
  std::size_t q = 2;
  std::size_t depth = 1;
  while (q < pieces.size()) {
    q *= 2;
    ++depth;
  }

  // Rectangle [0,M] x [0,1] cut along the central line y = 1/2. The top side
  // is split at the source breakpoints, the bottom at the image breakpoints,
  // and each source piece is glued to its image by translation. The left
  // and right sides are glued to each other. Vertical strands through
  // half-integers are the curve.
  SurfaceBuilder b;
  const std::size_t central = b.edge(M);
  const std::size_t side_top = b.edge(0);
  const std::size_t side_bottom = b.edge(0);
  const std::size_t d1 = b.edge(M);
  const std::size_t d2 = b.edge(M);
  const std::size_t e2 = b.edge(M);
  const std::size_t d3 = b.edge(M);

  std::vector<std::size_t> glued(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) glued[i] = b.edge(pieces[i].src.size());
  std::vector<std::size_t> top = glued;
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    return pieces[a].image().lo < pieces[c].image().lo;
  });
  std::vector<std::size_t> bottom;
  for (std::size_t i : order) bottom.push_back(glued[i]);
  while (top.size() < q) {
    const std::size_t pad = b.edge(0);
    top.push_back(pad);
    bottom.push_back(pad);
  }

  // Corners A=(0,1/2), B=(M,1/2), Rt=(M,1), Lt=(0,1), Lb=(0,0), Rb=(M,0).
  b.triangle({central, side_top, d1}, {true, true, false});  // A B Rt
  b.triangle({d1, d2, side_top}, {true, false, false});      // A Rt Lt
  b.split_top(d2, top, 0, q);
  b.split_bottom(e2, bottom, 0, q);
  b.triangle({e2, d3, side_bottom}, {true, false, false});       // Lb Rb A
  b.triangle({d3, side_bottom, central}, {true, true, false});   // A Rb B

  NormalCurveSystem sys;
  sys.surface = b.finish(central, sys.coords);
  sys.steps_per_eval = Integer(static_cast<unsigned long>(2 * depth + 4));
  sys.central_count = M;
  sys.iet = t;
  return sys;
}

CurvePosition central_crossing(const NormalCurveSystem& sys, const Integer& x) {
  if (x < 0 || x >= sys.central_count) throw Error(ErrorCode::OutOfRange, "central crossing " + to_string(x));
  return {sys.surface.central_edge, x, sys.surface.central_up};
}

CurvePosition step_normal_curve(const TriangulatedSurface& surface, const NormalCoordinates& coords,
                                const CurvePosition& pos) {
  const SurfaceTriangle& tri = surface.triangles[pos.entering.triangle];
  const std::size_t i = static_cast<std::size_t>(pos.entering.slot);
  const std::size_t next = (i + 1) % 3;
  const std::size_t prev = (i + 2) % 3;
  const Integer& ci = coords.counts[tri.edges[i]];
  const Integer& cn = coords.counts[tri.edges[next]];
  const Integer& cp = coords.counts[tri.edges[prev]];
  const Integer local = tri.forward[i] ? pos.index : Integer(ci - 1 - pos.index);
  // Arcs cutting the corner between slot i and slot i+1.
  const Integer corner_next = (ci + cn - cp) / 2;

  std::size_t exit;
  Integer exit_local;
  if (local >= ci - corner_next) {
    exit = next;
    exit_local = ci - 1 - local;
  } else {
    exit = prev;
    exit_local = cp - 1 - local;
  }
  const std::size_t e = tri.edges[exit];
  const Integer canonical = tri.forward[exit] ? exit_local : Integer(coords.counts[e] - 1 - exit_local);
  const EdgeSide here{pos.entering.triangle, static_cast<int>(exit)};
  const auto& sides = surface.edge_sides[e];
  return {e, canonical, sides[0] == here ? sides[1] : sides[0]};
}

CurvePosition trace_normal_curve_stepwise(const NormalCurveSystem& sys, const Integer& start_crossing,
                                          const Integer& steps) {
  CurvePosition pos = central_crossing(sys, start_crossing);
  for (Integer i = 0; i < steps; ++i) pos = step_normal_curve(sys.surface, sys.coords, pos);
  return pos;
}

CurvePosition trace_normal_curve(const NormalCurveSystem& sys, const Integer& start_crossing, const Integer& steps) {
  if (steps < 0) throw Error(ErrorCode::PreconditionViolated, "negative step count");
  const Integer turns = floor_div(steps, sys.steps_per_eval);
  const Integer rest = steps - turns * sys.steps_per_eval;
  CurvePosition pos = central_crossing(sys, iterate_accelerated(sys.iet, start_crossing, turns));
  for (Integer i = 0; i < rest; ++i) pos = step_normal_curve(sys.surface, sys.coords, pos);
  return pos;
}

}  // namespace octomaze
