#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octomaze/accel.hpp"
#include "octomaze/discretize.hpp"
#include "octomaze/envfile.hpp"
#include "octomaze/iet.hpp"
#include "octomaze/pipeline.hpp"
#include "octomaze/render.hpp"
#include "octomaze/report.hpp"

namespace py = pybind11;
using namespace octomaze;

namespace {

// Python ints cross as decimal text so size is unbounded.
Integer to_integer(const py::int_& v) { return parse_integer(py::str(v).cast<std::string>()); }
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

using PyPiece = std::tuple<py::int_, py::int_, py::int_>;

PartialIET to_partial(const py::int_& range, const std::vector<PyPiece>& pieces) {
  std::vector<Piece> out;
  for (const auto& [lo, hi, off] : pieces) out.push_back({{to_integer(lo), to_integer(hi)}, to_integer(off)});
  return PartialIET(to_integer(range), std::move(out));
}

std::vector<PyPiece> from_pieces(const std::vector<Piece>& pieces) {
  std::vector<PyPiece> out;
  for (const Piece& p : pieces) out.emplace_back(to_py(p.src.lo), to_py(p.src.hi), to_py(p.offset));
  return out;
}

TraceOptions options(const std::string& engine, const std::optional<py::int_>& budget) {
  TraceOptions o;
  if (engine == "naive") o.engine = EngineChoice::Naive;
  else if (engine == "accel") o.engine = EngineChoice::Accelerated;
  else if (engine == "auto") o.engine = EngineChoice::Auto;
  else throw py::value_error("engine must be naive, accel or auto");
  if (budget) o.max_naive_steps = to_integer(*budget);
  return o;
}

}  // namespace

PYBIND11_MODULE(_octomaze, m) {
  m.doc() = "Exact fate of a light ray in an octagonal mirror maze";

  // str(err) starts with the error code name, e.g. "InvalidSlope: ...".
  py::register_exception<Error>(m, "OctomazeError", PyExc_ValueError);

  m.def("trace_report", [](const std::string& text, const std::string& engine, std::optional<py::int_> budget) {
    return fate_report(trace_fate(parse_environment(text), options(engine, budget)));
  }, py::arg("text"), py::arg("engine") = "auto", py::arg("max_naive_steps") = py::none());

  m.def("simulate_report", [](const std::string& text, const py::int_& max_steps) {
    return fate_report(simulate_geometric(parse_environment(text), to_integer(max_steps)).fate);
  }, py::arg("text"), py::arg("max_steps"));

  m.def("normalize", [](const std::string& text) { return serialize_environment(parse_environment(text)); });

  m.def("generate", [](std::uint64_t seed, std::size_t segments, long extent) {
    GenOptions o;
    o.seed = seed;
    o.segments = segments;
    o.extent = extent;
    return generate_environment(o);
  }, py::arg("seed"), py::arg("segments"), py::arg("extent"));

  m.def("render_svg", [](const std::string& text, std::size_t cap) { return render_svg(parse_environment(text), cap); },
        py::arg("text"), py::arg("bounce_cap") = kDefaultBounceCap);

  m.def("complete", [](const py::int_& range, const std::vector<PyPiece>& pieces) {
    const CompletionMap c = complete(to_partial(range, pieces));
    return py::make_tuple(to_py(c.total.range()), from_pieces(c.total.pieces()));
  });

  m.def("iterate", [](const py::int_& range, const std::vector<PyPiece>& pieces, const py::int_& x,
                      const py::int_& k, const std::string& engine) {
    const TotalIET t(to_partial(range, pieces));
    if (engine == "naive") return to_py(iterate_naive(t, to_integer(x), to_integer(k)));
    if (engine == "accel") return to_py(iterate_accelerated(t, to_integer(x), to_integer(k)));
    throw py::value_error("engine must be naive or accel");
  }, py::arg("range"), py::arg("pieces"), py::arg("x"), py::arg("k"), py::arg("engine") = "accel");

  m.def("solve_partial", [](const py::int_& range, const std::vector<PyPiece>& pieces, const py::int_& x) {
    const PathEnd end = solve_partial(to_partial(range, pieces), to_integer(x), AcceleratedEngine{});
    return py::make_tuple(to_py(end.terminal), to_py(end.steps));
  });

  m.def("subdiv_count", [](const py::int_& dx, const py::int_& dy, const std::string& cls) {
    SlopeClass c;
    if (cls == "horizontal") c = SlopeClass::Horizontal;
    else if (cls == "vertical") c = SlopeClass::Vertical;
    else if (cls == "diag_up") c = SlopeClass::DiagUp;
    else if (cls == "diag_down") c = SlopeClass::DiagDown;
    else throw py::value_error("class must be horizontal, vertical, diag_up or diag_down");
    return to_py(subdiv_count(Direction(to_integer(dx), to_integer(dy)), c));
  });
}
