#include "octomaze/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "octomaze/envfile.hpp"
#include "octomaze/pipeline.hpp"
#include "octomaze/render.hpp"
#include "octomaze/report.hpp"

namespace octomaze {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_error(std::ostream& err, const Error& e) {
  if (e.line()) err << "line " << *e.line() << ": ";
  err << e.what() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fate of a light ray in an octagonal mirror maze"};
  app.require_subcommand(1);

  std::string trace_file, engine = "auto", max_naive;
  bool json = false;
  auto* trace = app.add_subcommand("trace", "Trace the ray and print a JSON fate report");
  trace->add_option("FILE", trace_file, "environment file")->required();
  trace->add_option("--engine", engine, "naive, accel or auto")->check(CLI::IsMember({"naive", "accel", "auto"}));
  trace->add_option("--max-naive-steps", max_naive, "step budget for the naive engine");
  trace->add_flag("--json", json, "JSON output (the only format)");

  std::uint64_t seed = 0;
  std::size_t count = 0;
  long extent = 16;
  auto* gen = app.add_subcommand("gen", "Print a random environment file");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--segments", count)->required();
  gen->add_option("--extent", extent)->required()->check(CLI::Range(4L, 1L << 40));

  std::string render_file, svg_out;
  std::size_t cap = kDefaultBounceCap;
  auto* render = app.add_subcommand("render", "Draw the maze and the first bounces as SVG");
  render->add_option("FILE", render_file, "environment file")->required();
  render->add_option("--out", svg_out, "output SVG path")->required();
  render->add_option("--bounce-cap", cap, "bounces to draw");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  Environment env;
  try {
    if (gen->parsed()) {
      GenOptions o;
      o.seed = seed;
      o.segments = count;
      o.extent = extent;
      out << generate_environment(o);
      return kExitOk;
    }
    env = parse_environment(read_file(trace->parsed() ? trace_file : render_file));
  } catch (const Error& e) {
    print_error(err, e);
    return e.code() == ErrorCode::GenerationFailure ? kExitFailure : kExitInput;
  }

  try {
    if (render->parsed()) {
      std::ofstream f(svg_out, std::ios::binary);
      if (!f) {
        err << "cannot write " << svg_out << '\n';
        return kExitInput;
      }
      f << render_svg(env, cap);
      return kExitOk;
    }
    TraceOptions opts;
    opts.engine = engine == "naive" ? EngineChoice::Naive : engine == "accel" ? EngineChoice::Accelerated : EngineChoice::Auto;
    if (!max_naive.empty()) {
      try {
        opts.max_naive_steps = parse_integer(max_naive);
      } catch (const Error& e) {
        print_error(err, e);
        return kExitInput;
      }
    }
    out << fate_report(trace_fate(env, opts));
    return kExitOk;
  } catch (const Error& e) {
    print_error(err, e);
    return e.code() == ErrorCode::StepBudgetExceeded ? kExitBudget : kExitFailure;
  }
}

}  // namespace octomaze
