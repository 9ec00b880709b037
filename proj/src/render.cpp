#include "octomaze/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "octomaze/pipeline.hpp"

namespace octomaze {

namespace {

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string num(const Rational& v) { return num(v.get_d()); }

}  // namespace

std::string render_svg(const Environment& env, std::size_t bounce_cap) {
  const BBox& b = env.bbox;
  const double w = Rational(b.xmax - b.xmin).get_d();
  const double h = Rational(b.ymax - b.ymin).get_d();
  const double stroke = std::max(w, h) / 300.0;

  // y is negated so the picture is not upside down.
  auto X = [](const Rational& x) { return num(x); };
  auto Y = [](const Rational& y) { return num(Rational(-y)); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(Rational(b.xmin)) << ' '
      << num(Rational(-b.ymax)) << ' ' << num(w) << ' ' << num(h) << "\">\n";
  out << "<rect class=\"bbox\" x=\"" << num(Rational(b.xmin)) << "\" y=\"" << num(Rational(-b.ymax)) << "\" width=\""
      << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\" stroke=\"#999\" stroke-width=\"" << num(stroke)
      << "\"/>\n";

  for (std::size_t i = 0; i < env.segments.size(); ++i) {
    const Segment& s = env.segments[i];
    const bool both = s.left_reflective && s.right_reflective;
    const bool none = !s.left_reflective && !s.right_reflective;
    const char* colour = both ? "#1f4fd1" : none ? "#222" : "#7a3fb8";
    out << "<line class=\"segment\" data-id=\"" << i << "\" data-left=\"" << (s.left_reflective ? "reflect" : "absorb")
        << "\" data-right=\"" << (s.right_reflective ? "reflect" : "absorb") << "\" x1=\"" << X(Rational(s.e1.x))
        << "\" y1=\"" << Y(Rational(s.e1.y)) << "\" x2=\"" << X(Rational(s.e2.x)) << "\" y2=\"" << Y(Rational(s.e2.y))
        << "\" stroke=\"" << colour << "\" stroke-width=\"" << num(2 * stroke) << "\"/>\n";
    const double mx = Rational(Rational(s.e1.x + s.e2.x) / 2).get_d();
    const double my = Rational(Rational(s.e1.y + s.e2.y) / 2).get_d();
    const double ex = s.delta_x().get_d(), ey = s.delta_y().get_d();
    const double len = std::sqrt(ex * ex + ey * ey);
    const double tick = 6 * stroke;
    for (Side side : {Side::Left, Side::Right}) {
      if (!s.reflective(side)) continue;
      // Left normal of e1->e2 is (-ey, ex).
      const double sgn = side == Side::Left ? 1.0 : -1.0;
      const double nx = -ey / len * tick * sgn, ny = ex / len * tick * sgn;
      out << "<line class=\"side-tick\" x1=\"" << num(mx) << "\" y1=\"" << num(-my) << "\" x2=\"" << num(mx + nx)
          << "\" y2=\"" << num(-(my + ny)) << "\" stroke=\"" << colour << "\" stroke-width=\"" << num(stroke)
          << "\"/>\n";
    }
  }

  const std::vector<RatPoint> path = ray_polyline(env, bounce_cap);
  out << "<polyline class=\"ray\" fill=\"none\" stroke=\"red\" stroke-width=\"" << num(stroke) << "\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << X(path[i].x) << ',' << Y(path[i].y);
  out << "\"/>\n";
  out << "<circle class=\"start\" cx=\"" << X(Rational(env.start.x)) << "\" cy=\"" << Y(Rational(env.start.y))
      << "\" r=\"" << num(3 * stroke) << "\" fill=\"red\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace octomaze
