// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "octomaze/accel.hpp"
#include "octomaze/cli.hpp"
#include "octomaze/discretize.hpp"
#include "octomaze/envfile.hpp"
#include "octomaze/pipeline.hpp"
#include "support.hpp"

using namespace octomaze;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what;
    ok = ok && cond;
  }
};

template <class F>
double median_ms(int runs, F&& f) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) t.push_back(testkit::time_ms(f));
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TotalIET mu() { return TotalIET(15, {{{0, 3}, 11}, {{4, 5}, -4}, {{6, 6}, 4}, {{7, 14}, -5}}); }
PartialIET f15() { return PartialIET(15, {{{0, 3}, 11}, {{4, 5}, -4}, {{7, 14}, -5}}); }

void ac1(Check& c) {
  CompletionMap m;
  const double ms = median_ms(5, [&] { m = complete(f15()); });
  const std::vector<Piece> added{{{6, 6}, 9}, {{15, 29}, 1}, {{30, 30}, -20}};
  std::vector<Piece> want = f15().pieces();
  want.insert(want.end(), added.begin(), added.end());
  std::sort(want.begin(), want.end(), [](const Piece& a, const Piece& b) { return a.src.lo < b.src.lo; });
  c.require(m.total.range() == 31, "range [0,30]");
  c.require(m.total.pieces() == want, "pieces [6]->[15], [15,29]->[16,30], [30]->[10]");
  c.require(ms < 1.0, "under 1 ms");
  c.note << "range " << m.total.range() << ", " << m.total.pieces().size() << " pieces, " << ms << " ms";
}

void ac2(Check& c) {
  bool bijective = false;
  Integer a, b, d;
  const double ms = median_ms(5, [&] {
    const TotalIET t = mu();
    a = t.apply(2);
    b = t.apply(6);
    d = t.apply(14);
    std::set<long> seen;
    for (long x = 0; x < 15; ++x) seen.insert(t.apply(x).get_si());
    bijective = seen.size() == 15 && *seen.begin() == 0 && *seen.rbegin() == 14;
  });
  c.require(a == 13 && b == 10 && d == 9, "apply(2)=13, apply(6)=10, apply(14)=9");
  c.require(bijective, "bijection of [0,15)");
  c.require(ms < 1.0, "under 1 ms");
  c.note << "2->" << a << " 6->" << b << " 14->" << d << ", bijective, " << ms << " ms";
}

void ac3(Check& c) {
  PathEnd end;
  const double ms = median_ms(5, [&] { end = solve_partial(f15(), 10, AcceleratedEngine{}); });
  const auto oracle = testkit::naive_path(f15(), 10);
  c.require(end.terminal == 6 && end.steps == 14, "(y, t) = (6, 14)");
  c.require(oracle.end == end.terminal && oracle.steps == end.steps, "matches naive orbit");
  c.require(ms < 1.0, "under 1 ms");
  c.note << "(y=" << end.terminal << ", t=" << end.steps << "), " << ms << " ms";
}

void ac4(Check& c) {
  testkit::Rng rng(2024);
  const std::vector<std::pair<SlopeClass, std::pair<long, long>>> units{
      {SlopeClass::Horizontal, {1, 0}}, {SlopeClass::Vertical, {0, 1}},
      {SlopeClass::DiagUp, {1, 1}}, {SlopeClass::DiagDown, {1, -1}}};
  int cases = 0;
  const double ms = testkit::time_ms([&] {
    for (int n = 0; n < 200; ++n) {
      long x = 0, y = 0;
      while (std::gcd(x, y) != 1) {
        x = rng.in(-50, 50);
        y = rng.in(-50, 50);
      }
      for (const auto& [cls, e] : units) {
        const long formula = subdiv_count(Direction(x, y), cls).get_si();
        const long crossings = testkit::brute_force_crossings(x, y, e.first, e.second, 110);
        const long pieces = crossings < 0 ? 0 : crossings + 1;
        c.require(pieces == formula, "direction (" + std::to_string(x) + "," + std::to_string(y) + ")");
        ++cases;
      }
    }
  });
  c.require(ms < 30000, "under 30 s");
  c.note << cases << " direction/class cases, " << ms << " ms";
}

void ac5(Check& c) {
  const std::vector<SlopeClass> classes{SlopeClass::Horizontal, SlopeClass::Vertical, SlopeClass::DiagUp,
                                        SlopeClass::DiagDown};
  int cases = 0;
  const double ms = median_ms(5, [&] {
    cases = 0;
    for (const Direction& base : {Direction(5, 3), Direction(1, 0), Direction(1, 1)}) {
      const auto orbit = direction_orbit(base);
      for (const Direction& d : orbit) {
        for (SlopeClass cls : classes) {
          if (is_parallel(d, cls)) continue;
          for (Parity p : {Parity::Plus, Parity::Minus}) {
            const auto [d1, p1] = reflect(d, p, cls);
            c.require(std::find(orbit.begin(), orbit.end(), d1) != orbit.end(), "closure");
            c.require(p1 != p, "parity flip");
            const auto [d2, p2] = reflect(d1, p1, cls);
            c.require(d2 == d && p2 == p, "involution");
            ++cases;
          }
        }
      }
    }
  });
  c.require(ms < 1.0, "under 1 ms");
  c.note << cases << " cases, " << ms << " ms";
}

void ac6(Check& c) {
  testkit::Rng rng(6);
  const double ms = testkit::time_ms([&] {
    for (int n = 0; n < 1000 && c.ok; ++n) {
      const TotalIET t = testkit::random_total(rng);
      const long M = t.range().get_si();
      const Integer x = rng.in(0, M - 1);
      const Integer k = rng.in(0, 10 * M);
      c.require(iterate_accelerated(t, x, k) == iterate_naive(t, x, k), "instance " + std::to_string(n));
    }
  });
  c.require(ms < 60000, "under 60 s");
  c.note << "1000 exchanges, " << ms << " ms";
}

void ac7(Check& c) {
  int kinds[3] = {0, 0, 0};
  const double ms = testkit::time_ms([&] {
    for (std::uint64_t seed = 0; seed < 500 && c.ok; ++seed) {
      const Environment env = parse_environment(testkit::random_maze(seed, 8, 32));
      const Fate solved = trace_fate(env);
      const Fate walked = simulate_geometric(env, 10000000, false).fate;
      c.require(solved == walked, "seed " + std::to_string(seed));
      ++kinds[int(walked.kind)];
    }
  });
  c.require(ms < 120000, "under 120 s");
  c.note << "500 mazes (" << kinds[0] << " absorbed, " << kinds[1] << " escaped, " << kinds[2] << " returned), "
         << ms << " ms";
}

void ac8(Check& c) {
  auto corridor_env = [](int k) { return parse_environment(testkit::corridor((Integer(1) << k) + 1)); };
  for (int k = 8; k <= 16; ++k) {
    const Environment env = corridor_env(k);
    const Fate f = trace_fate(env);
    c.require(f == simulate_geometric(env, Integer(1) << 20, false).fate, "k=" + std::to_string(k) + " matches simulation");
    c.require(f.bounces == Integer(1) << (k - 1), "k=" + std::to_string(k) + " closed form");
  }
  TraceOptions accel;
  accel.engine = EngineChoice::Accelerated;
  double worst = 0;
  for (int k : {20, 24, 32, 40, 48}) {
    const Environment env = corridor_env(k);
    Fate f;
    const double ms = testkit::time_ms([&] { f = trace_fate(env); });
    c.require(ms < 5000, "k=" + std::to_string(k) + " under 5 s");
    c.require(f.bounces == Integer(1) << (k - 1), "k=" + std::to_string(k) + " closed form");
    worst = std::max(worst, ms);
  }
  const Environment e16 = corridor_env(16), e48 = corridor_env(48);
  const double t16 = median_ms(7, [&] { trace_fate(e16, accel); });
  const double t48 = median_ms(7, [&] { trace_fate(e48, accel); });
  c.require(t48 <= 100 * t16, "runtime(48) <= 100 x runtime(16)");
  // 2^20 bounces is far short of the 2^31 needed at k=32.
  const Integer budget = Integer(1) << 20;
  bool budget_hit = false;
  const double sim_ms = testkit::time_ms([&] {
    try {
      simulate_geometric(corridor_env(32), budget, false);
    } catch (const Error& e) {
      budget_hit = e.code() == ErrorCode::StepBudgetExceeded;
    }
  });
  c.require(budget_hit, "naive simulator stops at its budget for k=32");
  const double full_hours = sim_ms * std::ldexp(1.0, 31 - 20) / 3.6e6;
  c.note << "k=8..16 exact, slowest large run " << worst << " ms, t48/t16 = " << t48 / t16
         << ", simulator hit its 2^20 budget at k=32 after " << sim_ms << " ms (about " << full_hours
         << " h for all 2^31 bounces)";
}

void ac9(Check& c) {
  testkit::Rng rng(9);
  std::vector<TotalIET> sources{mu()};
  for (int n = 0; n < 300; ++n) sources.push_back(testkit::random_total(rng, 500, 12));
  // Swap of [0, h] and [h+1, 2h].
  const Integer h = Integer(1) << 299;
  sources.push_back(TotalIET(2 * h + 1, {{{0, h}, h}, {{h + 1, 2 * h}, Integer(-(h + 1))}}));
  std::size_t triangles = 0;
  for (const TotalIET& t : sources) {
    const NormalCurveSystem sys = surface_from_iet(t);
    for (const SurfaceTriangle& tri : sys.surface.triangles) {
      const Integer& a = sys.coords.counts[tri.edges[0]];
      const Integer& b = sys.coords.counts[tri.edges[1]];
      const Integer& d = sys.coords.counts[tri.edges[2]];
      c.require(a >= 0 && b >= 0 && d >= 0, "non-negative");
      c.require(a <= b + d && b <= a + d && d <= a + b, "triangle inequality");
      c.require(Integer(a + b + d) % 2 == 0, "even sum");
      ++triangles;
    }
    c.require(coordinates_valid(sys.surface, sys.coords), "coordinates_valid");
    c.require(sys.central_count == t.range(), "central count is M");
  }
  c.note << sources.size() << " surfaces, " << triangles << " triangles";
}

void ac10(Check& c, const std::string& dir) {
  for (const std::string name : {"corridor11", "single_mirror", "empty"}) {
    const std::string want = slurp(dir + "/golden/" + name + ".json");
    std::string first;
    for (int run = 0; run < 2; ++run) {
      std::ostringstream out, err;
      const int rc = run_cli({"trace", dir + "/data/" + name + ".txt", "--json"}, out, err);
      c.require(rc == kExitOk, name + " exit code");
      if (run == 0) first = out.str();
      c.require(out.str() == first, name + " byte-identical across runs");
    }
    c.require(!want.empty() && first == want, name + " matches golden");
  }
  std::ostringstream out, err;
  const int rc = run_cli({"trace", dir + "/data/corridor11.txt", "--engine", "naive", "--max-naive-steps", "3"}, out, err);
  c.require(rc == kExitBudget, "budget exit code 3");
  c.note << "3 golden reports identical, budget exit " << rc;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : OCTOMAZE_TEST_DIR;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 completion golden", ac1},
      {"AC2 evaluation golden", ac2},
      {"AC3 orbit resolution", ac3},
      {"AC4 subdivision counts vs brute force", ac4},
      {"AC5 reflection algebra", ac5},
      {"AC6 accelerated vs naive iteration", ac6},
      {"AC7 solver vs geometric simulation", ac7},
      {"AC8 corridor scaling", ac8},
      {"AC9 normal coordinate validity", ac9},
      {"AC10 CLI golden reports", [&](Check& c) { ac10(c, dir); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << " exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.note.str() << std::endl;
    failed += !c.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
