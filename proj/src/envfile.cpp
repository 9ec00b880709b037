#include "octomaze/envfile.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace octomaze {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Integer integer_token(const std::string& t) { return parse_integer(t); }

bool side_token(const std::string& t, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (t.rfind(prefix, 0) != 0) throw Error(ErrorCode::SyntaxError, "expected " + prefix + "..., got '" + t + "'");
  const std::string v = t.substr(prefix.size());
  if (v == "reflect") return true;
  if (v == "absorb") return false;
  throw Error(ErrorCode::SyntaxError, "side must be reflect or absorb, got '" + v + "'");
}

void expect_arity(const std::vector<std::string>& tok, std::size_t n) {
  if (tok.size() != n) {
    throw Error(ErrorCode::SyntaxError,
                "'" + tok[0] + "' takes " + std::to_string(n - 1) + " fields, got " + std::to_string(tok.size() - 1));
  }
}

}  // namespace

Environment parse_environment(std::string_view text) {
  std::vector<RawSegment> segments;
  std::vector<std::size_t> segment_lines;
  std::optional<IntPoint> start;
  Integer dx, dy;
  std::size_t ray_line = 0;
  std::optional<BBox> bbox;
  std::size_t bbox_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "segment") {
        expect_arity(tok, 7);
        RawSegment s;
        s.e1 = {integer_token(tok[1]), integer_token(tok[2])};
        s.e2 = {integer_token(tok[3]), integer_token(tok[4])};
        s.left_reflective = side_token(tok[5], "left");
        s.right_reflective = side_token(tok[6], "right");
        segments.push_back(std::move(s));
        segment_lines.push_back(line_no);
      } else if (tok[0] == "ray") {
        if (start) throw Error(ErrorCode::SyntaxError, "second ray statement");
        expect_arity(tok, 5);
        start = IntPoint{integer_token(tok[1]), integer_token(tok[2])};
        dx = integer_token(tok[3]);
        dy = integer_token(tok[4]);
        ray_line = line_no;
      } else if (tok[0] == "bbox") {
        if (bbox) throw Error(ErrorCode::SyntaxError, "second bbox statement");
        expect_arity(tok, 5);
        Integer x1 = integer_token(tok[1]), y1 = integer_token(tok[2]);
        Integer x2 = integer_token(tok[3]), y2 = integer_token(tok[4]);
        if (x1 >= x2 || y1 >= y2) throw Error(ErrorCode::SyntaxError, "bbox needs X1 < X2 and Y1 < Y2");
        bbox = BBox{x1, y1, x2, y2};
        bbox_line = line_no;
      } else {
        throw Error(ErrorCode::SyntaxError, "unknown statement '" + tok[0] + "'");
      }
    } catch (const Error& e) {
      if (e.line()) throw;
      throw e.with_line(line_no);
    }
  }
  if (!start) throw Error(ErrorCode::SyntaxError, "missing ray statement").with_line(line_no);

  try {
    return validate_environment(segments, *start, dx, dy, bbox);
  } catch (const Error& e) {
    const bool about_start = e.code() == ErrorCode::StartOnSegment || e.code() == ErrorCode::StartOutsideBBox ||
                             e.code() == ErrorCode::ZeroDirection;
    if (!about_start && e.item() && *e.item() < segment_lines.size()) throw e.with_line(segment_lines[*e.item()]);
    if (e.code() == ErrorCode::SegmentOutsideBBox && bbox) throw e.with_line(bbox_line);
    throw e.with_line(ray_line);
  }
}

std::string serialize_environment(const Environment& env) {
  std::ostringstream out;
  for (const Segment& s : env.segments) {
    out << "segment " << s.e1.x << ' ' << s.e1.y << ' ' << s.e2.x << ' ' << s.e2.y
        << " left=" << (s.left_reflective ? "reflect" : "absorb")
        << " right=" << (s.right_reflective ? "reflect" : "absorb") << '\n';
  }
  out << "ray " << env.start.x << ' ' << env.start.y << ' ' << env.start_dir.dx() << ' ' << env.start_dir.dy() << '\n';
  if (env.bbox_explicit) {
    out << "bbox " << env.bbox.xmin << ' ' << env.bbox.ymin << ' ' << env.bbox.xmax << ' ' << env.bbox.ymax << '\n';
  }
  return out.str();
}

namespace {

// mt19937_64 output is fixed by the standard; the reduction below is ours,
// so the draws do not depend on the library's distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }
  bool percent(int p) { return in(0, 99) < p; }

 private:
  std::mt19937_64 rng_;
};

constexpr int kAttemptsPerItem = 2000;

}  // namespace

std::string generate_environment(const GenOptions& opts) {
  if (opts.extent < 4) throw Error(ErrorCode::GenerationFailure, "extent must be at least 4");
  Draw draw(opts.seed);
  const long e = opts.extent;
  std::vector<Segment> placed;
  std::ostringstream out;

  for (std::size_t n = 0; n < opts.segments; ++n) {
    bool ok = false;
    for (int attempt = 0; attempt < kAttemptsPerItem && !ok; ++attempt) {
      const long x1 = draw.in(0, e), y1 = draw.in(0, e);
      const long len = draw.in(1, std::max(1L, e / 2));
      long x2 = x1, y2 = y1;
      switch (draw.in(0, 3)) {
        case 0: x2 += len; break;
        case 1: y2 += len; break;
        case 2: x2 += len; y2 += len; break;
        default: x2 += len; y2 -= len; break;
      }
      if (x2 < 0 || x2 > e || y2 < 0 || y2 > e) continue;
      const bool left = draw.percent(opts.reflect_percent);
      const bool right = draw.percent(opts.reflect_percent);
      Segment s = make_segment({x1, y1}, {x2, y2}, left, right);
      bool clash = false;
      for (const Segment& p : placed) clash = clash || segments_touch(p, s);
      if (clash) continue;
      placed.push_back(s);
      out << "segment " << x1 << ' ' << y1 << ' ' << x2 << ' ' << y2 << " left=" << (left ? "reflect" : "absorb")
          << " right=" << (right ? "reflect" : "absorb") << '\n';
      ok = true;
    }
    if (!ok) throw Error(ErrorCode::GenerationFailure, "could not place segment " + std::to_string(n));
  }

  for (int attempt = 0; attempt < kAttemptsPerItem; ++attempt) {
    const IntPoint start{draw.in(0, e), draw.in(0, e)};
    bool clash = false;
    for (const Segment& p : placed) clash = clash || point_on_segment(start, p);
    if (clash) continue;
    long dx = 0, dy = 0;
    while (dx == 0 && dy == 0) {
      dx = draw.in(-opts.max_direction, opts.max_direction);
      dy = draw.in(-opts.max_direction, opts.max_direction);
    }
    const Direction d(dx, dy);
    out << "ray " << start.x << ' ' << start.y << ' ' << d.dx() << ' ' << d.dy() << '\n';
    return out.str();
  }
  throw Error(ErrorCode::GenerationFailure, "could not place the start");
}

}  // namespace octomaze
