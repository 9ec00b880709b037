#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "octomaze/envfile.hpp"
#include "octomaze/iet.hpp"

namespace testkit {

using octomaze::Integer;
using octomaze::Piece;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long in(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(in(0, long(i) - 1))]);
  }

 private:
  std::mt19937_64 g_;
};

/// Cuts [0, M) into `pieces` intervals and lays them out in a random order.
inline std::vector<Piece> random_exchange(Rng& rng, long M, long pieces) {
  std::vector<long> cuts;
  for (long c = 1; c < M; ++c) cuts.push_back(c);
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(pieces - 1));
  cuts.push_back(0);
  cuts.push_back(M);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> order(static_cast<std::size_t>(pieces));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Piece> out(static_cast<std::size_t>(pieces));
  long pos = 0;
  for (std::size_t i : order) {
    const long lo = cuts[i], hi = cuts[i + 1] - 1;
    out[i] = Piece{{lo, hi}, Integer(pos - lo)};
    pos += hi - lo + 1;
  }
  return out;
}

inline octomaze::TotalIET random_total(Rng& rng, long max_range = 500, long max_pieces = 12) {
  const long M = rng.in(1, max_range);
  return octomaze::TotalIET(M, random_exchange(rng, M, rng.in(1, std::min(max_pieces, M))));
}

/// Drops whole pieces and chips ends off others; at least one element goes.
inline octomaze::PartialIET random_partial(Rng& rng, long max_range = 200, long max_pieces = 10) {
  const long M = rng.in(2, max_range);
  const auto full = random_exchange(rng, M, rng.in(1, std::min(max_pieces, M)));
  std::vector<Piece> kept;
  for (const Piece& p : full) {
    switch (rng.in(0, 3)) {
      case 0: break;
      case 1:
        if (p.src.size() > 1) kept.push_back({{p.src.lo + 1, p.src.hi}, p.offset});
        break;
      default: kept.push_back(p);
    }
  }
  if (!kept.empty() && kept.size() == full.size()) {
    bool any_missing = false;
    for (std::size_t i = 0; i < kept.size(); ++i) any_missing = any_missing || !(kept[i] == full[i]);
    if (!any_missing) kept.erase(kept.begin() + rng.in(0, long(kept.size()) - 1));
  }
  return octomaze::PartialIET(M, kept);
}

/// Path of x under a partial map until it leaves the domain.
struct NaivePath {
  Integer end;
  Integer steps;
};
inline NaivePath naive_path(const octomaze::PartialIET& f, Integer x) {
  Integer steps = 0;
  while (auto y = f.apply(x)) {
    x = *y;
    ++steps;
  }
  return {x, steps};
}

/// Two horizontal mirrors y=0 and y=2 over x in [0, L] facing each other,
/// launched diagonally from (1,1).
inline std::string corridor(const Integer& L) {
  const std::string l = L.get_str();
  return "segment 0 0 " + l + " 0 left=reflect right=absorb\n" + "segment 0 2 " + l +
         " 2 left=absorb right=reflect\n" + "ray 1 1 1 1\n";
}

inline std::string random_maze(std::uint64_t seed, std::size_t max_segments = 8, long extent = 32,
                               int reflect_percent = 75) {
  octomaze::GenOptions o;
  o.seed = seed;
  o.segments = static_cast<std::size_t>(seed % (max_segments + 1));
  o.extent = extent;
  o.reflect_percent = reflect_percent;
  return octomaze::generate_environment(o);
}

/// Distinct crossings of the lines {p + t*(x, y)}, p integer in the window,
/// with the open unit segment from (0,0) to (ex, ey).
inline long brute_force_crossings(long x, long y, long ex, long ey, long window) {
  const long den = x * ey - y * ex;
  if (den == 0) return -1;
  std::vector<char> seen(static_cast<std::size_t>(std::labs(den)), 0);
  long count = 0;
  for (long px = -window; px <= window; ++px) {
    for (long py = -window; py <= window; ++py) {
      // Crossing at s = cross(d, p) / cross(d, e).
      long num = x * py - y * px;
      long d = den;
      if (d < 0) { num = -num; d = -d; }
      if (num > 0 && num < d && !seen[static_cast<std::size_t>(num)]) {
        seen[static_cast<std::size_t>(num)] = 1;
        ++count;
      }
    }
  }
  return count;
}

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace testkit
