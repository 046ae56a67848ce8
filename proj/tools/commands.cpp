#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <variant>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"
#include "spnkit/selftest.hpp"
#include "spnkit/signgraph.hpp"
#include "spnkit/stqp.hpp"
#include "spnkit/text_io.hpp"

namespace spnkit::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) {
    throw UsageError(cfg.command + " expects exactly one matrix file");
  }
  return cfg.inputs.front();
}

Json certificate_report(const SymMatrix& a, const SpnCertificate& c, const char* route,
                        const Tolerances& tol) {
  Json j{{"outcome", "certificate"}, {"route", route}};
  j.update(to_json(c));
  j["valid"] = validate_certificate(a, c, tol);
  return j;
}

Json witness_report(const SymMatrix& a, const DnnWitness& w, const Tolerances& tol) {
  Json j{{"outcome", "witness"}, {"route", "oracle"}};
  j.update(to_json(w));
  j["valid"] = validate_witness(a, w, tol);
  return j;
}

// Recursion on an orbit image, pulled back to A. nullopt when no group
// element is known or the image is outside the recursion's reach.
std::optional<SpnCertificate> via_orbit(const SymMatrix& a, const Tolerances& tol) {
  std::optional<GroupElement> g;
  for (auto search : {permute_into_Mn, rescale_into_Mn}) {
    try {
      if (OrbitResult r = search(a, tol); r.found) {
        g = std::move(r.witness);
        break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LpNumericalFailure) throw;
    }
  }
  if (!g && a.n() <= kMaxJointDim) {
    try {
      if (OrbitResult r = joint_orbit_search(a, tol); r.found) g = std::move(r.witness);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LpNumericalFailure) throw;
    }
  }
  if (!g) return std::nullopt;
  try {
    const SpnCertificate image = spn_decompose_recursive(apply_group(*g, a), tol);
    return pull_back(a, image, *g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInSupportedClass || e.kind() == ErrorKind::InvalidArgument) {
      return std::nullopt;
    }
    throw;
  }
}

void flatten(const std::string& key, const Json& v, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(key.empty() ? k : key + "." + k, child, rows);
    return;
  }
  if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(key + "[" + std::to_string(i) + "]", v[i], rows);
    return;
  }
  rows.emplace_back(key, v.is_string() ? v.get<std::string>() : v.dump());
}

}  // namespace

CommandResult cmd_classify(const RunConfig& cfg) {
  const SymMatrix a = read_matrix(single_input(cfg));
  Json labels = Json::array();
  for (const ClassLabel& l : classify(a, cfg.tol)) labels.push_back(to_json(l));
  CommandResult r;
  r.report = Json{{"n", a.n()},
                  {"labels", std::move(labels)},
                  {"row_signs", to_json(row_sign_summary(a, cfg.tol))},
                  {"idx", idx(a, cfg.tol)}};
  return r;
}

CommandResult cmd_decompose(const RunConfig& cfg) {
  const SymMatrix a = read_matrix(single_input(cfg));
  const Tolerances& tol = cfg.tol;
  CommandResult r;
  std::string recursion_note;
  try {
    r.report = certificate_report(a, spn_decompose_recursive(a, tol), "recursive", tol);
    return r;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInSupportedClass && e.kind() != ErrorKind::InvalidArgument) throw;
    recursion_note = e.what();
  }
  if (auto c = via_orbit(a, tol)) {
    r.report = certificate_report(a, *c, "orbit", tol);
    return r;
  }
  try {
    SpnOutcome out = spn_oracle(a, tol);
    if (auto* c = std::get_if<SpnCertificate>(&out)) {
      r.report = certificate_report(a, *c, "oracle", tol);
    } else {
      r.report = witness_report(a, std::get<DnnWitness>(out), tol);
      r.exit_code = kNegative;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Undecided) throw;
    r.report = Json{{"outcome", "undecided"},
                    {"recursion", recursion_note},
                    {"oracle", e.what()}};
    r.exit_code = kUndecided;
  }
  return r;
}

CommandResult cmd_stqp(const RunConfig& cfg) {
  StqpInstance inst;
  if (cfg.separable) {
    if (cfg.inputs.size() != 2) throw UsageError("stqp --separable expects an alpha file and a beta file");
    inst = build_separable(read_vector(cfg.inputs[0]), read_vector(cfg.inputs[1]));
  } else {
    inst = StqpInstance::raw(read_matrix(single_input(cfg)));
  }
  const StqpReport report = certify_tightness(inst, cfg.tol);
  CommandResult r;
  r.report = to_json(report);
  r.report["provenance"] = to_string(inst.provenance);
  if (report.spn_undecided || !report.z_star) {
    r.exit_code = kUndecided;
  } else {
    r.exit_code = report.tight ? kAffirmative : kNegative;
  }
  return r;
}

CommandResult cmd_orbit(const RunConfig& cfg) {
  const SymMatrix a = read_matrix(single_input(cfg));
  CommandResult r;
  bool any = false;
  bool unsure = false;
  const auto attempt = [&](const char* key, auto&& search) {
    try {
      const OrbitResult res = search(a, cfg.tol);
      any = any || res.found;
      r.report[key] = to_json(res);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LpNumericalFailure && e.kind() != ErrorKind::DimensionTooLarge) throw;
      unsure = unsure || e.kind() == ErrorKind::LpNumericalFailure;
      r.report[key] = Json{{"found", nullptr}, {"error", to_string(e.kind())}, {"message", e.what()}};
    }
  };
  attempt("permute", permute_into_Mn);
  attempt("rescale", rescale_into_Mn);
  attempt("joint", joint_orbit_search);
  r.report["found"] = any;
  r.exit_code = any ? kAffirmative : (unsure ? kUndecided : kNegative);
  return r;
}

CommandResult cmd_signgraph(const RunConfig& cfg) {
  const SymMatrix a = read_matrix(single_input(cfg));
  const SignGraphs g = extract_sign_graphs(a, cfg.tol);
  const bool filter = orbit_necessary_filter(a, cfg.tol);
  CommandResult r;
  r.report = to_json(g);
  r.report["filter"] = filter;
  if (cfg.dot) r.raw = to_dot(g);
  r.exit_code = filter ? kAffirmative : kNegative;
  return r;
}

CommandResult cmd_selftest(const RunConfig& cfg) {
  CommandResult r;
  Json suites = Json::array();
  bool ok = true;
  for (const SuiteResult& s : run_selftest(cfg.seed, cfg.cases, cfg.tol)) {
    ok = ok && s.passed();
    suites.push_back(Json{{"name", s.name},
                          {"cases", s.cases},
                          {"failures", s.failures},
                          {"first_failure", s.first_failure},
                          {"seconds", s.seconds}});
  }
  r.report = Json{{"seed", cfg.seed}, {"suites", std::move(suites)}, {"passed", ok}};
  r.exit_code = ok ? kAffirmative : kNegative;
  return r;
}

std::string render_text(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", report, rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ');
    // Multi-line values (matrices) continue under the value column.
    std::istringstream lines(value);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (!first) out << std::string(width + 2, ' ');
      out << line << '\n';
      first = false;
    }
    if (first) out << '\n';
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Copositive, SPN and DNN certificates for symmetric matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  app.add_option("--eps-ord", cfg.tol.eps_ord, "Tolerance for entry comparisons")->capture_default_str();
  app.add_option("--eps-psd", cfg.tol.eps_psd, "Tolerance for eigenvalue tests")->capture_default_str();
  app.add_option("--eps-feas", cfg.tol.eps_feas, "Tolerance for residuals")->capture_default_str();
  app.add_option("--eps-opt", cfg.tol.eps_opt, "Bisection width")->capture_default_str();
  app.add_option("--max-iter", cfg.tol.max_iter, "Iteration budget for iterative solvers")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomised suites")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "List every class the matrix belongs to");
  classify_cmd->add_option("path", cfg.inputs, "Matrix file")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "SPN certificate or DNN witness");
  decompose_cmd->add_option("path", cfg.inputs, "Matrix file")->required();
  auto* stqp_cmd = app.add_subcommand("stqp", "Standard quadratic program report");
  stqp_cmd->add_flag("--separable", cfg.separable, "Read alpha and beta vector files");
  stqp_cmd->add_option("paths", cfg.inputs, "Matrix file, or alpha and beta files")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "Search the orbit of M_n");
  orbit_cmd->add_option("path", cfg.inputs, "Matrix file")->required();
  auto* sign_cmd = app.add_subcommand("signgraph", "Sign graphs and the threshold filter");
  sign_cmd->add_flag("--dot", cfg.dot, "Emit Graphviz DOT");
  sign_cmd->add_option("path", cfg.inputs, "Matrix file")->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "Randomised property suites");
  selftest_cmd->add_option("--cases", cfg.cases, "Cases per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  cfg.command = app.get_subcommands().front()->get_name();

  CommandResult result;
  try {
    cfg.tol.validate();
    if (cfg.command == "classify") result = cmd_classify(cfg);
    else if (cfg.command == "decompose") result = cmd_decompose(cfg);
    else if (cfg.command == "stqp") result = cmd_stqp(cfg);
    else if (cfg.command == "orbit") result = cmd_orbit(cfg);
    else if (cfg.command == "signgraph") result = cmd_signgraph(cfg);
    else result = cmd_selftest(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Undecided:
      case ErrorKind::NoConvergence:
      case ErrorKind::LpNumericalFailure:
      case ErrorKind::NotInSupportedClass:
        return kUndecided;
      default:
        return kUsage;
    }
  }

  if (!result.raw.empty()) {
    out << result.raw;
  } else if (cfg.format == Format::Text) {
    out << render_text(result.report);
  } else {
    out << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace spnkit::cli
