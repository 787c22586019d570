#include "bruhat/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "bruhat/io.hpp"

namespace bruhat::cli {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{
      "diagram", "quotient", "descent-system", "ascents", "hpoly",   "edges",
      "smooth",  "smooth-enum", "lattice",    "fvector", "hvector", "verify"};
  return list;
}

namespace {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string render(const io::json& j) { return j.dump(2) + "\n"; }

RunResult done(std::string output, int code = kExitOk) { return {code, std::move(output), {}}; }

RunResult dispatch(const JobSpec& spec) {
  const DiagramType type = parse_diagram_type(spec.diagram);
  auto group = std::make_shared<const WeylGroup>(type);
  const DynkinDiagram& d = group->diagram();
  const NodeSet j = parse_node_set(spec.j, type.rank);
  const std::string& cmd = spec.command;

  if (spec.format == Format::Dot && cmd != "edges")
    throw ParseError("--out dot is only available for edges");
  const bool text = spec.format == Format::Text;

  if (cmd == "diagram") return done(text ? io::diagram_text(d) : render(io::diagram_json(d)));
  if (cmd == "smooth") {
    const auto report = is_combinatorially_smooth(j, d);
    return done(text ? io::smooth_text(report) : render(io::smooth_json(report)));
  }
  if (cmd == "smooth-enum") return done(render(io::smooth_enum_json(d)));
  if (cmd == "lattice") return done(render(io::lattice_json(cross_section(j, d))));
  if (cmd == "fvector") return done(render(io::json(face_vector(j, d).f)));
  if (cmd == "hvector") return done(render(io::json(face_vector(j, d).h)));
  if (cmd == "verify") {
    const auto report = verify_instance(group, j, spec.budget);
    return done(text ? io::verify_text(report) : render(io::verify_json(report)),
                report.ok() ? kExitOk : kExitVerify);
  }

  auto quotient = enumerate_quotient(group, j, spec.budget);
  if (cmd == "quotient")
    return done(text ? io::quotient_text(*quotient) : render(io::quotient_json(*quotient)));
  if (cmd == "descent-system")
    return done(render(io::descent_system_json(descent_system(quotient))));

  AugmentedPoset poset(descent_system(quotient));
  if (cmd == "ascents") return done(render(io::ascents_json(poset)));
  if (cmd == "hpoly") {
    const auto h = h_statistic_polynomial(poset);
    return done(text ? io::hpoly_text(h) : render(io::hpoly_json(h)));
  }
  if (cmd == "edges") {
    const auto es = edges(poset);
    return done(spec.format == Format::Dot ? io::edges_dot(poset, es)
                                                : render(io::edges_json(poset, es)));
  }
  throw ParseError("unknown command: " + cmd);
}

}  // namespace

RunResult run(const JobSpec& spec) {
  try {
    return dispatch(spec);
  } catch (const BudgetExceeded& e) {
    return {kExitBudget, {}, e.what()};
  } catch (const std::overflow_error& e) {
    return {kExitBudget, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitParse, {}, e.what()};
  }
}

std::variant<JobSpec, RunResult> parse(int argc, const char* const* argv) {
  CLI::App app{"Descent systems, smoothness and orbit polytope faces of Weyl groups",
               "bruhat-descent"};
  app.require_subcommand(1);
  JobSpec spec;
  std::string out = "json";
  unsigned long long seed = 0;
  for (const auto& name : commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("type", spec.diagram, "Diagram type, e.g. B4")->required();
    sub->add_option("--j", spec.j, "Comma-separated nodes of J (1-based)");
    sub->add_option("--out", out, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--budget", spec.budget, "Enumeration cap (points)");
    sub->add_option("--seed", seed, "Ignored; output is deterministic");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return RunResult{kExitOk, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return RunResult{kExitParse, {}, e.what()};
  }
  spec.command = app.get_subcommands().front()->get_name();
  spec.format = out == "dot" ? Format::Dot : out == "text" ? Format::Text : Format::Json;
  return spec;
}

int main(int argc, const char* const* argv) {
  auto parsed = parse(argc, argv);
  RunResult result = std::holds_alternative<RunResult>(parsed)
                         ? std::get<RunResult>(parsed)
                         : run(std::get<JobSpec>(parsed));
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}

}  // namespace bruhat::cli
