#include "octomaze/report.hpp"

#include <json.hpp>

namespace octomaze {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const RatPoint& p) { return Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }
Json dir_json(const Direction& d) { return Json{{"dx", to_string(d.dx())}, {"dy", to_string(d.dy())}}; }

const char* fate_name(FateKind k) {
  switch (k) {
    case FateKind::Absorbed: return "absorbed";
    case FateKind::Escaped: return "escaped";
    case FateKind::ReturnedToStart: return "returned_to_start";
  }
  return "";
}

}  // namespace

std::string fate_report(const Fate& f) {
  Json j;
  j["fate"] = fate_name(f.kind);
  j["bounces"] = to_string(f.bounces);
  j["engine"] = f.engine;
  if (f.absorbed) {
    const Absorption& a = *f.absorbed;
    Json obj;
    if (a.object == AbsorberKind::SegmentSide) {
      obj = Json{{"type", "segment_side"}, {"segment", a.segment}, {"side", a.side == Side::Left ? "left" : "right"}};
    } else {
      obj = Json{{"type", "segment_endpoint"}, {"segment", a.segment}, {"endpoint", a.endpoint == 1 ? "e1" : "e2"}};
    }
    j["absorbed"] = Json{{"point", point_json(a.point)}, {"object", obj}, {"incoming_direction", dir_json(a.incoming_dir)}};
  }
  if (f.escape) j["escape"] = Json{{"point", point_json(f.escape->point)}, {"direction", dir_json(f.escape->dir)}};
  return j.dump(2) + "\n";
}

std::string error_report(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.message();
  if (e.line()) j["line"] = *e.line();
  return j.dump(2) + "\n";
}

}  // namespace octomaze
