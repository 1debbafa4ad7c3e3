#pragma once

// JSON documents for scalars, polynomials, certificates, configurations and
// the verdict / LP reports.  Exact values are always strings of the scalar
// grammar, so documents round-trip bit-exactly.

#include "tammes/certificate.hpp"
#include "tammes/configuration.hpp"
#include "tammes/lp_search.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tammes {

using Json = nlohmann::ordered_json;

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

inline int require_int(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(std::string(where) + ": '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

// --- scalars --------------------------------------------------------------

inline Json scalar_to_json(const ExactScalar& x) {
  return Json{{"a", format_rational(x.rational_part())},
              {"b", format_rational(x.sqrt_part())},
              {"m", x.radicand()}};
}

/// Object form {"a","b","m"}, or a string in the textual grammar, or an integer.
inline ExactScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactScalar(j.get<long>());
  if (!j.is_object()) throw SchemaError("scalar must be an object, a string or an integer");
  auto part = [&](const char* key) {
    if (!j.contains(key)) return Rational(0);
    const Json& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw SchemaError(std::string("scalar field '") + key + "' must be a string");
    return parse_rational(v.get<std::string>());
  };
  const Rational a = part("a");
  const Rational b = part("b");
  std::int64_t m = 1;
  if (j.contains("m")) {
    if (!j.at("m").is_number_integer()) throw SchemaError("scalar field 'm' must be an integer");
    m = j.at("m").get<std::int64_t>();
  }
  if (b == 0) return ExactScalar(a, b, std::max<std::int64_t>(m, 1));
  return ExactScalar(a, b, m);
}

inline Json scalars_to_json(std::span<const ExactScalar> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

inline std::vector<ExactScalar> scalars_from_json(const Json& j, const char* where) {
  if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array");
  std::vector<ExactScalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

inline Json poly_to_json(const Poly& p) { return scalars_to_json(p.coeffs()); }
inline Poly poly_from_json(const Json& j) { return Poly(scalars_from_json(j, "polynomial")); }

inline Json expansion_to_json(const GegExpansion& e) {
  return Json{{"dim", e.dim}, {"coeffs", scalars_to_json(e.coeffs)}};
}

// --- certificates ---------------------------------------------------------

inline Json certificate_to_json(const Certificate& c) {
  return Json{{"dim", c.dim()},
              {"tau", scalar_to_json(c.tau())},
              {"coeffs", scalars_to_json(c.expansion().coeffs)},
              {"basis", "gegenbauer"}};
}

/// `default_dim` fills in a missing "dim" (dimension-generic certificates,
/// which must then use the monomial basis).
inline Certificate certificate_from_json(const Json& j, std::optional<int> default_dim = std::nullopt) {
  const char* where = "certificate";
  const std::string basis = j.contains("basis") ? j.at("basis").get<std::string>() : "gegenbauer";
  int dim = 0;
  if (j.contains("dim")) {
    dim = detail::require_int(j, "dim", where);
  } else if (default_dim) {
    dim = *default_dim;
  } else {
    throw SchemaError("certificate: missing field 'dim'");
  }
  ExactScalar tau = scalar_from_json(detail::require(j, "tau", where));
  auto coeffs = scalars_from_json(detail::require(j, "coeffs", where), "certificate coeffs");
  if (basis == "gegenbauer") return Certificate::from_gegenbauer(dim, std::move(tau), std::move(coeffs));
  if (basis == "monomial") return Certificate::from_monomial(dim, std::move(tau), Poly(std::move(coeffs)));
  throw SchemaError("certificate: unknown basis '" + basis + "'");
}

// --- configurations -------------------------------------------------------

inline Json config_to_json(const Configuration& c) {
  Json j{{"dim", c.dim()}, {"size", c.size()}, {"label", c.label()}};
  if (c.is_exact()) {
    Json spec = Json::array();
    for (const auto& g : c.spectrum()) spec.push_back(Json{{"value", scalar_to_json(g.value)}, {"mult", g.multiplicity}});
    j["spectrum"] = std::move(spec);
  }
  if (c.coords()) j["coords"] = *c.coords();
  return j;
}

/// Exact when "spectrum" is present; otherwise float-only from "coords".
inline Configuration load_config(const Json& j) {
  const char* where = "configuration";
  const int dim = detail::require_int(j, "dim", where);
  const std::string label = j.contains("label") ? j.at("label").get<std::string>() : "file";
  std::optional<Coords> coords;
  if (j.contains("coords")) {
    try {
      coords = j.at("coords").get<Coords>();
    } catch (const nlohmann::json::exception&) {
      throw SchemaError("configuration: 'coords' must be an array of number arrays");
    }
  }
  if (!j.contains("spectrum")) {
    if (!coords) throw SchemaError("configuration: needs 'spectrum' or 'coords'");
    return Configuration::from_float_coords(dim, std::move(*coords), label);
  }
  const Json& size_j = detail::require(j, "size", where);
  if (!size_j.is_number_unsigned() && !size_j.is_number_integer()) throw SchemaError("configuration: bad 'size'");
  if (size_j.get<long long>() < 1) throw SchemaError("configuration: 'size' must be positive");
  const auto size = size_j.get<std::size_t>();
  const Json& spec = j.at("spectrum");
  if (!spec.is_array()) throw SchemaError("configuration: 'spectrum' must be an array");
  std::vector<GramValue> values;
  for (const auto& e : spec) {
    const Json& mult = detail::require(e, "mult", "spectrum entry");
    if (!mult.is_number_integer() || mult.get<long long>() < 0) {
      throw SchemaError("spectrum entry: 'mult' must be a nonnegative integer");
    }
    values.push_back({scalar_from_json(detail::require(e, "value", "spectrum entry")), mult.get<std::size_t>()});
  }
  return Configuration::from_spectrum(dim, size, label, std::move(values), std::move(coords));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// --- theorem inputs -------------------------------------------------------

/// A bundled (f, g, t2) triple plus the name of the configuration it is
/// meant for.  Certificates without "dim" take the configuration's.
struct TheoremDocument {
  std::string name;
  std::string config;
  Json f;
  Json g;
  ExactScalar t2;
};

inline TheoremDocument theorem_document_from_json(const Json& j) {
  TheoremDocument d;
  d.name = j.value("name", std::string());
  d.config = j.value("config", std::string());
  d.f = detail::require(j, "f", "theorem input");
  d.g = detail::require(j, "g", "theorem input");
  d.t2 = scalar_from_json(detail::require(j, "t2", "theorem input"));
  return d;
}

inline TheoremInput make_theorem_input(const TheoremDocument& d, Configuration config) {
  Certificate f = certificate_from_json(d.f, config.dim());
  Certificate g = certificate_from_json(d.g, config.dim());
  return TheoremInput{std::move(config), std::move(f), std::move(g), d.t2};
}

inline Json theorem_input_to_json(const TheoremInput& in) {
  return Json{{"config", config_to_json(in.config)},
              {"f", certificate_to_json(in.f)},
              {"g", certificate_to_json(in.g)},
              {"t2", scalar_to_json(in.t2)}};
}

// --- reports --------------------------------------------------------------

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, ExactScalar>) {
    return scalar_to_json(*v);
  } else {
    return *v;
  }
}

inline std::optional<ExactScalar> optional_scalar(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return scalar_from_json(j.at(key));
}

}  // namespace detail

inline Json membership_to_json(const MembershipReport& m) {
  return Json{{"member", m.member},
              {"coefficients_ok", m.coefficients_ok},
              {"violated_index", detail::optional_json(m.violated_index)},
              {"nonpositive_ok", m.nonpositive_ok},
              {"witness", detail::optional_json(m.witness)},
              {"interior_roots", m.interior_roots},
              {"failure", m.failure}};
}

inline MembershipReport membership_from_json(const Json& j) {
  MembershipReport m;
  m.member = detail::require(j, "member", "membership").get<bool>();
  m.coefficients_ok = detail::require(j, "coefficients_ok", "membership").get<bool>();
  if (j.contains("violated_index") && !j.at("violated_index").is_null()) {
    m.violated_index = j.at("violated_index").get<std::size_t>();
  }
  m.nonpositive_ok = detail::require(j, "nonpositive_ok", "membership").get<bool>();
  m.witness = detail::optional_scalar(j, "witness");
  m.interior_roots = j.value("interior_roots", 0);
  m.failure = j.value("failure", std::string());
  return m;
}

inline Json bound_condition_to_json(const BoundCondition& b) {
  return Json{{"pass", b.pass},
              {"membership", membership_to_json(b.membership)},
              {"at_one", scalar_to_json(b.at_one)},
              {"c0", scalar_to_json(b.c0)},
              {"sharp", detail::optional_json(b.sharp)},
              {"sharp_float", b.sharp ? Json(b.sharp->to_double()) : Json(nullptr)},
              {"degree", b.degree}};
}

inline BoundCondition bound_condition_from_json(const Json& j) {
  BoundCondition b;
  b.pass = detail::require(j, "pass", "condition").get<bool>();
  b.membership = membership_from_json(detail::require(j, "membership", "condition"));
  b.at_one = scalar_from_json(detail::require(j, "at_one", "condition"));
  b.c0 = scalar_from_json(detail::require(j, "c0", "condition"));
  b.sharp = detail::optional_scalar(j, "sharp");
  b.degree = detail::require_int(j, "degree", "condition");
  return b;
}

inline Json verdict_to_json(const Verdict& v) {
  Json failed = Json::array();
  for (const auto& f : v.failed) failed.push_back(f);
  return Json{{"optimal", v.optimal},
              {"dim", v.dim},
              {"n_points", v.n_points},
              {"t_c", scalar_to_json(v.t_c)},
              {"t_c_float", v.t_c.to_double()},
              {"d_squared", scalar_to_json(v.d_squared)},
              {"d", v.d},
              {"conditions",
               {{"i", bound_condition_to_json(v.cond_i)},
                {"ii",
                 {{"pass", v.cond_ii.pass},
                  {"root_count", v.cond_ii.root_count},
                  {"lo", scalar_to_json(v.cond_ii.lo)},
                  {"hi", scalar_to_json(v.cond_ii.hi)}}},
                {"iii", bound_condition_to_json(v.cond_iii)}}},
              {"failed", std::move(failed)}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.optimal = detail::require(j, "optimal", "verdict").get<bool>();
  v.dim = detail::require_int(j, "dim", "verdict");
  v.n_points = detail::require(j, "n_points", "verdict").get<std::size_t>();
  v.t_c = scalar_from_json(detail::require(j, "t_c", "verdict"));
  v.d_squared = scalar_from_json(detail::require(j, "d_squared", "verdict"));
  v.d = detail::require(j, "d", "verdict").get<double>();
  const Json& c = detail::require(j, "conditions", "verdict");
  v.cond_i = bound_condition_from_json(detail::require(c, "i", "conditions"));
  const Json& ii = detail::require(c, "ii", "conditions");
  v.cond_ii.pass = detail::require(ii, "pass", "condition ii").get<bool>();
  v.cond_ii.root_count = detail::require_int(ii, "root_count", "condition ii");
  v.cond_ii.lo = scalar_from_json(detail::require(ii, "lo", "condition ii"));
  v.cond_ii.hi = scalar_from_json(detail::require(ii, "hi", "condition ii"));
  v.cond_iii = bound_condition_from_json(detail::require(c, "iii", "conditions"));
  for (const auto& f : detail::require(j, "failed", "verdict")) v.failed.push_back(f.get<std::string>());
  return v;
}

inline Json lp_result_to_json(const LPResult& r) {
  return Json{{"dim", r.dim},
              {"tau", r.tau},
              {"degree", r.degree},
              {"status", to_string(r.status)},
              {"bound", r.bound},
              {"coeffs", r.coeffs},
              {"violation", r.violation},
              {"refinement_rounds", r.refinement_rounds},
              {"grid_size", r.grid_size},
              {"simplex_iterations", r.simplex_iterations}};
}

inline LPResult lp_result_from_json(const Json& j) {
  LPResult r;
  r.dim = detail::require_int(j, "dim", "lp result");
  r.tau = detail::require(j, "tau", "lp result").get<double>();
  r.degree = detail::require_int(j, "degree", "lp result");
  const std::string s = detail::require(j, "status", "lp result").get<std::string>();
  if (s == "optimal") {
    r.status = LPStatus::optimal;
  } else if (s == "infeasible-grid") {
    r.status = LPStatus::infeasible_grid;
  } else if (s == "iteration-limit") {
    r.status = LPStatus::iteration_limit;
  } else {
    throw SchemaError("lp result: unknown status '" + s + "'");
  }
  // Infinite bounds serialize as null.
  const Json& b = detail::require(j, "bound", "lp result");
  r.bound = b.is_null() ? std::numeric_limits<double>::infinity() : b.get<double>();
  r.coeffs = detail::require(j, "coeffs", "lp result").get<std::vector<double>>();
  const Json& viol = detail::require(j, "violation", "lp result");
  r.violation = viol.is_null() ? 0.0 : viol.get<double>();
  r.refinement_rounds = detail::require_int(j, "refinement_rounds", "lp result");
  r.grid_size = detail::require(j, "grid_size", "lp result").get<std::size_t>();
  r.simplex_iterations = detail::require(j, "simplex_iterations", "lp result").get<std::size_t>();
  return r;
}

}  // namespace tammes
