#pragma once

// Command logic for the `tammes` executable.  run() takes the argument list
// (without the program name) and two streams, so tests drive it in-process.
//
// Exit codes: 0 verified / solved, 1 refuted / not optimal, 2 usage or input
// error.

#include "tammes/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef TAMMES_FIXTURE_DIR
#define TAMMES_FIXTURE_DIR "fixtures"
#endif

namespace tammes::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kRefuted = 1, kInputError = 2 };

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ten significant digits; presentation only.
inline std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string exact_and_float(const ExactScalar& x) {
  return x.to_string() + " (" + fmt10(x.to_double()) + ")";
}

namespace detail {

namespace fs = std::filesystem;

inline bool is_builtin_name(const std::string& s) {
  return s == "icosahedron" || s == "600-cell" || s.starts_with("cross-polytope:") || s.starts_with("simplex:");
}

inline Configuration resolve_config(const std::string& spec) {
  if (is_builtin_name(spec)) return builtin_config(spec);
  if (fs::is_regular_file(spec)) return load_config(read_json_file(spec));
  throw InputError("unknown configuration '" + spec + "' (not a built-in name or a readable file)");
}

inline std::string fixture_path(const std::string& spec, const std::string& dir) {
  if (fs::is_regular_file(spec)) return spec;
  const fs::path p = fs::path(dir) / (spec + ".json");
  if (fs::is_regular_file(p)) return p.string();
  throw InputError("no fixture or file named '" + spec + "'");
}

// A certificate document, or the `which` member of a bundled theorem input.
inline Json resolve_certificate_doc(const std::string& spec, const char* which, const std::string& dir) {
  Json doc = read_json_file(fixture_path(spec, dir));
  if (doc.is_object() && doc.contains(which) && doc.at(which).is_object()) return doc.at(which);
  return doc;
}

inline const char* pass_text(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace detail

struct Globals {
  bool json = false;
  bool quiet = false;
  std::string fixture_dir = TAMMES_FIXTURE_DIR;
};

struct VerifyArgs {
  std::string config, cert_f, cert_g, t2, fixture;
};

struct BoundArgs {
  int dim = 0;
  std::string tau;
  int degree = 0;
  double tol = 1e-9;
  int rounds = 20;
  std::optional<long> rationalize;
};

struct GegenbauerArgs {
  int dim = 0;
  std::optional<int> degree;
  std::optional<std::string> expand;
};

struct ConfigArgs {
  std::string name, file;
  bool stats = false;
};

// Each command fills `inputs` / `outcome` and returns an exit code; human
// text goes to `human`.
inline int cmd_verify(const VerifyArgs& a, const Globals& g, Json& inputs, Json& outcome, std::ostream& human) {
  std::optional<TheoremDocument> doc;
  if (!a.fixture.empty()) {
    const std::string path = detail::fixture_path(a.fixture, g.fixture_dir);
    doc = theorem_document_from_json(read_json_file(path));
    inputs["fixture"] = path;
  } else if (a.cert_f.empty() || a.cert_g.empty() || a.t2.empty()) {
    throw InputError("verify needs --fixture, or all of --cert-f, --cert-g and --t2");
  }
  const std::string config_spec = !a.config.empty() ? a.config : doc ? doc->config : std::string();
  if (config_spec.empty()) throw InputError("verify needs --config (the fixture names none)");
  Configuration config = detail::resolve_config(config_spec);
  inputs["config"] = config_spec;

  TheoremDocument d = doc.value_or(TheoremDocument{});
  if (!a.cert_f.empty()) {
    d.f = detail::resolve_certificate_doc(a.cert_f, "f", g.fixture_dir);
    inputs["cert_f"] = a.cert_f;
  }
  if (!a.cert_g.empty()) {
    d.g = detail::resolve_certificate_doc(a.cert_g, "g", g.fixture_dir);
    inputs["cert_g"] = a.cert_g;
  }
  if (!a.t2.empty()) d.t2 = ExactScalar::parse(a.t2);
  inputs["t2"] = scalar_to_json(d.t2);

  const TheoremInput in = make_theorem_input(d, std::move(config));
  const Verdict v = verify_theorem(in);
  outcome = verdict_to_json(v);

  const auto bound_line = [&](const char* tag, const char* name, const BoundCondition& b, const char* tau_name) {
    human << "  (" << tag << ") " << detail::pass_text(b.pass) << "  " << name << " in P(" << b.degree << ", "
          << tau_name << ", " << v.dim << "): " << (b.membership.member ? "yes" : "no");
    if (!b.membership.member) human << " [" << b.membership.failure << "]";
    human << "\n        " << name << "(1) = " << b.at_one << ", c_0 = " << b.c0;
    if (b.sharp) human << ", " << name << "# = " << exact_and_float(*b.sharp);
    human << "\n";
  };
  human << "configuration " << in.config.label() << ": n = " << v.dim << ", N = " << v.n_points << "\n";
  human << "  t_C = " << exact_and_float(v.t_c) << ", t2 = " << exact_and_float(in.t2) << "\n";
  bound_line("i", "f", v.cond_i, "t_C");
  human << "  (ii) " << detail::pass_text(v.cond_ii.pass) << "  distinct roots of f in (t2, t_C): "
        << v.cond_ii.root_count << "\n";
  bound_line("iii", "g", v.cond_iii, "t2");
  if (v.optimal) {
    human << "optimal: d = sqrt(" << v.d_squared << ") = " << fmt10(v.d) << "\n";
  } else {
    human << "not optimal: failed condition";
    for (const auto& f : v.failed) human << " (" << f << ")";
    human << "\n";
  }
  return v.optimal ? kOk : kRefuted;
}

inline int cmd_bound(const BoundArgs& a, const Globals&, Json& inputs, Json& outcome, std::ostream& human) {
  const ExactScalar tau = ExactScalar::parse(a.tau);
  if (!(ExactScalar(-1) < tau) || !(tau < ExactScalar(1))) {
    throw InputError("--tau " + tau.to_string() + " must lie strictly between -1 and 1");
  }
  if (a.dim < 2) throw InputError("--dim must be >= 2");
  if (a.degree < 1 || a.degree > kMaxGegenbauerDegree) {
    throw InputError("--degree must lie in [1, " + std::to_string(kMaxGegenbauerDegree) + "]");
  }
  if (!(a.tol > 0.0)) throw InputError("--tol must be positive");
  if (a.rounds < 0) throw InputError("--rounds must be >= 0");
  inputs = Json{{"dim", a.dim}, {"tau", scalar_to_json(tau)}, {"degree", a.degree}, {"tol", a.tol}, {"rounds", a.rounds}};

  LPOptions opt;
  opt.tolerance = a.tol;
  opt.max_rounds = a.rounds;
  const LPResult r = lp_bound(a.dim, tau.to_double(), a.degree, opt);
  outcome = Json{{"lp", lp_result_to_json(r)}};
  human << "LP bound for n = " << a.dim << ", tau = " << exact_and_float(tau) << ", K = " << a.degree << "\n";
  human << "  status " << to_string(r.status) << ", f# = " << fmt10(r.bound) << ", max f on [-1, tau] = "
        << fmt10(r.violation) << "\n";
  human << "  rounds " << r.refinement_rounds << ", grid " << r.grid_size << ", simplex iterations "
        << r.simplex_iterations << "\n";
  human << "  c_1..c_K =";
  for (double c : r.coeffs) human << " " << fmt10(c);
  human << "\n";
  int code = r.status == LPStatus::optimal ? kOk : kRefuted;

  if (a.rationalize) {
    if (*a.rationalize < 1) throw InputError("--rationalize needs a positive denominator cap");
    inputs["rationalize"] = *a.rationalize;
    Json rj{{"cap", *a.rationalize}};
    if (r.status != LPStatus::optimal) {
      rj["member"] = false;
      rj["failure"] = "LP status is not optimal";
      code = kRefuted;
    } else {
      const RationalizeResult rr = rationalize_certificate(r, a.dim, tau, Integer(*a.rationalize));
      Json coeffs = Json::array();
      for (const auto& q : rr.coeffs) coeffs.push_back(format_rational(q));
      rj["coeffs"] = std::move(coeffs);
      rj["membership"] = membership_to_json(rr.membership);
      rj["member"] = rr.certificate.has_value();
      if (rr.certificate) {
        const ExactScalar fs = f_sharp(*rr.certificate);
        rj["certificate"] = certificate_to_json(*rr.certificate);
        rj["f_sharp"] = scalar_to_json(fs);
        human << "  rationalized (cap " << *a.rationalize << "): member, f# = " << exact_and_float(fs) << "\n";
      } else {
        rj["failure"] = rr.failure;
        human << "  rationalized (cap " << *a.rationalize << "): not a member, " << rr.failure << "\n";
        code = kRefuted;
      }
    }
    outcome["rationalized"] = std::move(rj);
  }
  return code;
}

inline int cmd_gegenbauer(const GegenbauerArgs& a, const Globals&, Json& inputs, Json& outcome, std::ostream& human) {
  if (a.degree.has_value() == a.expand.has_value()) throw InputError("gegenbauer needs exactly one of --degree, --expand");
  inputs["dim"] = a.dim;
  if (a.degree) {
    inputs["degree"] = *a.degree;
    const Poly& p = gegenbauer_poly(a.dim, *a.degree);
    outcome = Json{{"dim", a.dim}, {"degree", *a.degree}, {"poly", poly_to_json(p)}, {"text", pretty_poly(p)}};
    human << "P_" << *a.degree << "^(" << a.dim << ")(t) = " << pretty_poly(p) << "\n";
    return kOk;
  }
  inputs["expand"] = *a.expand;
  const Poly p = parse_poly(*a.expand);
  const GegExpansion e = monomial_to_geg(p, a.dim);
  outcome = Json{{"input", poly_to_json(p)}, {"expansion", expansion_to_json(e)}};
  human << pretty_poly(p) << " =\n";
  if (e.coeffs.empty()) human << "  0\n";
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (e.coeffs[k].is_zero()) continue;
    human << "  + (" << e.coeffs[k] << ") P_" << k << "^(" << a.dim << ")\n";
  }
  return kOk;
}

inline int cmd_config(const ConfigArgs& a, const Globals&, Json& inputs, Json& outcome, std::ostream& human) {
  if (a.name.empty() == a.file.empty()) throw InputError("config needs exactly one of --name, --file");
  const Configuration c = a.name.empty() ? load_config(read_json_file(a.file)) : builtin_config(a.name);
  inputs[a.name.empty() ? "file" : "name"] = a.name.empty() ? a.file : a.name;
  outcome = config_to_json(c);
  human << c.label() << ": n = " << c.dim() << ", N = " << c.size() << (c.is_exact() ? "" : " (float only)") << "\n";
  if (c.is_exact()) {
    for (const auto& g : c.spectrum()) {
      human << "  " << exact_and_float(g.value) << "  x" << g.multiplicity << "\n";
    }
  } else {
    human << "  " << c.float_spectrum().size() << " distinct float inner products\n";
  }
  if (a.stats) {
    const ConfigStats s = config_stats(c);
    Json sj{{"size", s.size}, {"dim", s.dim}, {"t_c_float", s.t_c_float}, {"d_c", s.d_c}};
    if (s.t_c) {
      sj["t_c"] = scalar_to_json(*s.t_c);
      sj["d_c_squared"] = scalar_to_json(*s.d_c_squared);
      sj["d_c_symbolic"] = s.d_c_symbolic;
      human << "  t_C = " << exact_and_float(*s.t_c) << "\n  d_C = " << s.d_c_symbolic << " = " << fmt10(s.d_c) << "\n";
    } else {
      human << "  t_C = " << fmt10(s.t_c_float) << "\n  d_C = " << fmt10(s.d_c) << "\n";
    }
    outcome["stats"] = std::move(sj);
  }
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates and LP bounds for the Tammes problem", "tammes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Globals g;
  app.add_flag("--json", g.json, "Print the machine-readable report");
  app.add_flag("--quiet", g.quiet, "Suppress the human summary");
  app.add_option("--fixture-dir", g.fixture_dir, "Directory holding bundled fixtures");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the three optimality conditions exactly");
  verify->add_option("--config", va.config, "Built-in name or configuration JSON file");
  verify->add_option("--cert-f", va.cert_f, "Certificate f: file or fixture name");
  verify->add_option("--cert-g", va.cert_g, "Certificate g: file or fixture name");
  verify->add_option("--t2", va.t2, "Threshold t2 (exact scalar)");
  verify->add_option("--fixture", va.fixture, "Bundled (f, g, t2) input: fixture name or file");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Numerical Delsarte LP bound");
  bound->add_option("--dim", ba.dim)->required();
  bound->add_option("--tau", ba.tau, "Threshold (exact scalar grammar)")->required();
  bound->add_option("--degree", ba.degree)->required();
  bound->add_option("--tol", ba.tol, "Feasibility tolerance");
  bound->add_option("--rounds", ba.rounds, "Refinement round limit");
  bound->add_option("--rationalize", ba.rationalize, "Round to rationals with this denominator cap and re-check exactly");

  GegenbauerArgs ga;
  auto* geg = app.add_subcommand("gegenbauer", "Gegenbauer polynomials and expansions");
  geg->add_option("--dim", ga.dim)->required();
  geg->add_option("--degree", ga.degree, "Print P_k in the monomial basis");
  geg->add_option("--expand", ga.expand, "Comma-separated monomial coefficients, lowest degree first");

  ConfigArgs ca;
  auto* config = app.add_subcommand("config", "Inspect a configuration");
  config->add_option("--name", ca.name, "Built-in name");
  config->add_option("--file", ca.file, "Configuration JSON file");
  config->add_flag("--stats", ca.stats, "Print t_C and d_C");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  Json report{{"tool", "tammes"}, {"version", kVersion}, {"command", command}, {"args", args}};
  Json inputs = Json::object();
  Json outcome = nullptr;
  std::ostringstream human;
  int code = kInputError;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "verify") code = cmd_verify(va, g, inputs, outcome, human);
    if (command == "bound") code = cmd_bound(ba, g, inputs, outcome, human);
    if (command == "gegenbauer") code = cmd_gegenbauer(ga, g, inputs, outcome, human);
    if (command == "config") code = cmd_config(ca, g, inputs, outcome, human);
  } catch (const std::exception& e) {
    // Everything that escapes a command is bad input: unreadable files,
    // schema or grammar violations, failed preconditions.
    err << "error: " << e.what() << "\n";
    report["error"] = e.what();
    code = kInputError;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["inputs"] = std::move(inputs);
  report["outcome"] = std::move(outcome);
  report["exit_code"] = code;
  report["elapsed_seconds"] = elapsed;

  // With --json, stdout carries only the report; the summary moves to stderr.
  if (!g.quiet && code != kInputError) (g.json ? err : out) << human.str();
  if (g.json) out << report.dump(2) << "\n";
  return code;
}

}  // namespace tammes::cli
