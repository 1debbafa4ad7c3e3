#pragma once

// Point configurations on S^(n-1).  Exact information lives in the Gram
// spectrum (the multiset of off-diagonal inner products); float coordinates
// are kept only for cross-checks and numerical experiments.

#include "tammes/exact_scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GramValue {
  ExactScalar value;
  std::size_t multiplicity = 0;  // unordered pairs
  friend bool operator==(const GramValue&, const GramValue&) = default;
};

struct FloatGramValue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  friend bool operator==(const FloatGramValue&, const FloatGramValue&) = default;
};

using Coords = std::vector<std::vector<double>>;

/// Points known exactly up to a common scale: the true points are
/// vectors[i] / sqrt(norm2).  The vectors may live in a larger ambient space
/// than the configuration's dimension (the simplex uses R^(n+1)).
struct ExactPoints {
  std::vector<std::vector<ExactScalar>> vectors;
  ExactScalar norm2;
};

inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kSpectrumMatchTolerance = 1e-9;

class Configuration {
 public:
  /// Exact configuration from its spectrum, validated.  When coordinates are
  /// given, every pairwise float inner product must land within 1e-9 of an
  /// exact value, with matching multiplicities.
  static Configuration from_spectrum(int dim, std::size_t size, std::string label,
                                     std::vector<GramValue> spectrum,
                                     std::optional<Coords> coords = std::nullopt) {
    Configuration c;
    c.dim_ = dim;
    c.size_ = size;
    c.label_ = std::move(label);
    c.exact_ = true;
    c.spectrum_ = normalize(std::move(spectrum));
    c.coords_ = std::move(coords);
    c.validate();
    return c;
  }

  /// Exact spectrum computed pair by pair from exact (scaled) points; float
  /// coordinates are derived from the same points unless supplied.
  static Configuration from_exact_points(int dim, std::string label, ExactPoints points,
                                         std::optional<Coords> coords = std::nullopt) {
    const std::size_t n = points.vectors.size();
    if (n < 1) throw ConfigurationError("configuration needs at least one point");
    if (points.norm2.sign() <= 0) throw ConfigurationError("squared norm must be positive");
    for (const auto& v : points.vectors) {
      if (squared_norm(v) != points.norm2) {
        throw ConfigurationError("exact points do not share the stated squared norm");
      }
    }
    std::map<ExactScalar, std::size_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++counts[dot(points.vectors[i], points.vectors[j]) / points.norm2];
      }
    }
    std::vector<GramValue> spectrum;
    for (auto& [value, mult] : counts) spectrum.push_back({value, mult});
    if (!coords) {
      const double scale = std::sqrt(points.norm2.to_double());
      Coords cs;
      for (const auto& v : points.vectors) {
        std::vector<double> row;
        for (const auto& x : v) row.push_back(x.to_double() / scale);
        cs.push_back(std::move(row));
      }
      coords = std::move(cs);
    }
    Configuration c = from_spectrum(dim, n, std::move(label), std::move(spectrum), std::move(coords));
    c.exact_points_ = std::move(points);
    return c;
  }

  /// Float-only configuration: the spectrum carries one entry per distinct
  /// double inner product and no exact values.
  static Configuration from_float_coords(int dim, Coords coords, std::string label) {
    Configuration c;
    c.dim_ = dim;
    c.size_ = coords.size();
    c.label_ = std::move(label);
    c.exact_ = false;
    c.coords_ = std::move(coords);
    std::map<double, std::size_t, std::greater<>> counts;
    const Coords& xs = *c.coords_;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) ++counts[dot(xs[i], xs[j])];
    }
    for (auto [v, m] : counts) c.float_spectrum_.push_back({v, m});
    c.validate();
    return c;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return size_; }
  const std::string& label() const { return label_; }
  bool is_exact() const { return exact_; }
  std::size_t pair_count() const { return size_ * (size_ - 1) / 2; }

  /// Exact spectrum sorted by decreasing value (empty for float-only).
  const std::vector<GramValue>& spectrum() const { return spectrum_; }
  /// Float spectrum sorted by decreasing value; for exact configurations this
  /// is the exact spectrum rounded.
  std::vector<FloatGramValue> float_spectrum() const {
    if (!exact_) return float_spectrum_;
    std::vector<FloatGramValue> out;
    for (const auto& g : spectrum_) out.push_back({g.value.to_double(), g.multiplicity});
    return out;
  }
  const std::optional<Coords>& coords() const { return coords_; }
  const std::optional<ExactPoints>& exact_points() const { return exact_points_; }

  /// Largest off-diagonal inner product.
  const ExactScalar& t_c() const {
    if (!exact_) throw ConfigurationError("configuration '" + label_ + "' has no exact spectrum");
    if (spectrum_.empty()) throw ConfigurationError("t_C undefined for fewer than two points");
    return spectrum_.front().value;
  }
  double t_c_float() const {
    if (exact_) return t_c().to_double();
    if (float_spectrum_.empty()) throw ConfigurationError("t_C undefined for fewer than two points");
    return float_spectrum_.front().value;
  }

  friend bool operator==(const Configuration& x, const Configuration& y) {
    return x.dim_ == y.dim_ && x.size_ == y.size_ && x.exact_ == y.exact_ &&
           x.spectrum_ == y.spectrum_ && x.float_spectrum_ == y.float_spectrum_;
  }

  static double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  }

 private:
  static ExactScalar dot(const std::vector<ExactScalar>& x, const std::vector<ExactScalar>& y) {
    if (x.size() != y.size()) throw ConfigurationError("exact point dimension mismatch");
    ExactScalar s(0);
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  }
  static ExactScalar squared_norm(const std::vector<ExactScalar>& x) { return dot(x, x); }

  static std::vector<GramValue> normalize(std::vector<GramValue> in) {
    std::map<ExactScalar, std::size_t, std::greater<>> merged;
    for (auto& g : in) merged[g.value] += g.multiplicity;
    std::vector<GramValue> out;
    for (auto& [v, m] : merged) {
      if (m > 0) out.push_back({v, m});
    }
    return out;
  }

  void validate() const {
    if (dim_ < 1) throw ConfigurationError("dimension must be >= 1");
    if (size_ < 1) throw ConfigurationError("configuration needs at least one point");
    if (exact_) {
      std::size_t total = 0;
      for (const auto& g : spectrum_) {
        total += g.multiplicity;
        if (g.value < ExactScalar(-1) || !(g.value < ExactScalar(1))) {
          throw ConfigurationError("Gram value " + g.value.to_string() + " outside [-1, 1)");
        }
      }
      if (total != pair_count()) {
        throw ConfigurationError("spectrum multiplicities sum to " + std::to_string(total) +
                                 ", expected N(N-1)/2 = " + std::to_string(pair_count()));
      }
    }
    if (!coords_) return;
    const Coords& xs = *coords_;
    if (xs.size() != size_) {
      throw ConfigurationError("coordinate rows (" + std::to_string(xs.size()) +
                               ") differ from size " + std::to_string(size_));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i].size() != static_cast<std::size_t>(dim_)) {
        throw ConfigurationError("coordinate row " + std::to_string(i) + " has wrong length");
      }
      const double norm = std::sqrt(dot(xs[i], xs[i]));
      if (!(std::abs(norm - 1.0) <= kUnitNormTolerance)) {
        throw ConfigurationError("coordinate row " + std::to_string(i) + " is not a unit vector");
      }
    }
    if (!exact_) {
      if (!float_spectrum_.empty() && float_spectrum_.front().value >= 1.0) {
        throw ConfigurationError("repeated point: inner product reaches 1");
      }
      return;
    }
    std::vector<double> values;
    for (const auto& g : spectrum_) values.push_back(g.value.to_double());
    std::vector<std::size_t> hits(values.size(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const double ip = dot(xs[i], xs[j]);
        std::size_t best = 0;
        for (std::size_t k = 1; k < values.size(); ++k) {
          if (std::abs(values[k] - ip) < std::abs(values[best] - ip)) best = k;
        }
        if (values.empty() || std::abs(values[best] - ip) > kSpectrumMatchTolerance) {
          throw ConfigurationError("inner product of rows " + std::to_string(i) + " and " +
                                   std::to_string(j) + " matches no exact spectrum value");
        }
        ++hits[best];
      }
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (hits[k] != spectrum_[k].multiplicity) {
        throw ConfigurationError("float coordinates give multiplicity " + std::to_string(hits[k]) +
                                 " for " + spectrum_[k].value.to_string() + ", spectrum says " +
                                 std::to_string(spectrum_[k].multiplicity));
      }
    }
  }

  int dim_ = 0;
  std::size_t size_ = 0;
  std::string label_;
  bool exact_ = true;
  std::vector<GramValue> spectrum_;
  std::vector<FloatGramValue> float_spectrum_;
  std::optional<Coords> coords_;
  std::optional<ExactPoints> exact_points_;
};

/// The 2n points +-e_i.
inline Configuration make_cross_polytope(int n) {
  if (n < 1) throw std::invalid_argument("cross polytope needs n >= 1");
  ExactPoints pts{{}, ExactScalar(1)};
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<ExactScalar> v(static_cast<std::size_t>(n), ExactScalar(0));
      v[static_cast<std::size_t>(i)] = ExactScalar(s);
      pts.vectors.push_back(std::move(v));
    }
  }
  return Configuration::from_exact_points(n, "cross-polytope:" + std::to_string(n), std::move(pts));
}

/// Regular simplex: n+1 points with every inner product -1/n.  Exact points
/// are e_i minus the centroid in R^(n+1); float coordinates use the Helmert
/// basis of the orthogonal complement of (1, ..., 1).
inline Configuration make_simplex(int n) {
  if (n < 1) throw std::invalid_argument("simplex needs n >= 1");
  const auto np1 = static_cast<std::size_t>(n) + 1;
  const ExactScalar centroid(Rational(Integer(1), Integer(n + 1)));
  ExactPoints pts{{}, ExactScalar(Rational(Integer(n), Integer(n + 1)))};
  for (std::size_t i = 0; i < np1; ++i) {
    std::vector<ExactScalar> v(np1, -centroid);
    v[i] = ExactScalar(1) - centroid;
    pts.vectors.push_back(std::move(v));
  }
  const double scale = std::sqrt(static_cast<double>(n) / (n + 1));
  Coords coords(np1, std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (std::size_t i = 0; i < np1; ++i) {
    for (int k = 1; k <= n; ++k) {
      // k-th Helmert vector: (1, ..., 1, -k, 0, ...) / sqrt(k(k+1)).
      const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
      double entry = 0.0;
      if (i < static_cast<std::size_t>(k)) entry = 1.0 / norm;
      if (i == static_cast<std::size_t>(k)) entry = -static_cast<double>(k) / norm;
      coords[i][static_cast<std::size_t>(k - 1)] = entry / scale;
    }
  }
  return Configuration::from_exact_points(n, "simplex:" + std::to_string(n), std::move(pts),
                                          std::move(coords));
}

namespace detail {

inline ExactScalar golden_ratio() {
  return ExactScalar(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), 5);
}

}  // namespace detail

/// The 12 cyclic permutations of (0, +-1, +-phi), scaled to the unit sphere.
inline Configuration make_icosahedron() {
  const ExactScalar phi = detail::golden_ratio();
  ExactPoints pts{{}, ExactScalar(1) + phi * phi};
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const std::array<ExactScalar, 3> base{ExactScalar(0), ExactScalar(s1), phi * ExactScalar(s2)};
      for (std::size_t shift = 0; shift < 3; ++shift) {
        std::vector<ExactScalar> v(3);
        for (std::size_t k = 0; k < 3; ++k) v[(k + shift) % 3] = base[k];
        pts.vectors.push_back(std::move(v));
      }
    }
  }
  return Configuration::from_exact_points(3, "icosahedron", std::move(pts));
}

/// 600-cell, scaled by 2: the 24-cell points (+-2, 0, 0, 0) and
/// (+-1, +-1, +-1, +-1), plus the even permutations of (+-phi, +-1, +-1/phi, 0).
inline Configuration make_600cell() {
  const ExactScalar phi = detail::golden_ratio();
  const ExactScalar inv_phi = phi - ExactScalar(1);
  ExactPoints pts{{}, ExactScalar(4)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (int s : {2, -2}) {
      std::vector<ExactScalar> v(4, ExactScalar(0));
      v[i] = ExactScalar(s);
      pts.vectors.push_back(std::move(v));
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<ExactScalar> v(4);
    for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(k)] = ExactScalar((mask >> k) & 1 ? -1 : 1);
    pts.vectors.push_back(std::move(v));
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    if (inversions % 2 != 0) continue;
    const std::array<ExactScalar, 4> base{phi, ExactScalar(1), inv_phi, ExactScalar(0)};
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<ExactScalar> v(4);
      for (std::size_t k = 0; k < 4; ++k) {
        ExactScalar x = base[k];
        if (k < 3 && ((mask >> k) & 1)) x = -x;
        v[static_cast<std::size_t>(perm[k])] = x;
      }
      pts.vectors.push_back(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Configuration::from_exact_points(4, "600-cell", std::move(pts));
}

/// N i.i.d. uniform points from normalized Gaussians; float-only.
inline Configuration random_config(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_config needs n >= 2");
  if (count < 2) throw std::invalid_argument("random_config needs N >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Coords coords;
  while (coords.size() < count) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      norm2 += x * x;
    }
    if (norm2 < 1e-24) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    coords.push_back(std::move(v));
  }
  return Configuration::from_float_coords(
      n, std::move(coords),
      "random:" + std::to_string(n) + ":" + std::to_string(count) + ":" + std::to_string(seed));
}

/// The points with the given indices, spectrum recomputed exactly.
inline Configuration sub_configuration(const Configuration& c, const std::vector<std::size_t>& indices) {
  if (!c.exact_points()) throw ConfigurationError("sub_configuration needs exact points");
  ExactPoints pts{{}, c.exact_points()->norm2};
  Coords coords;
  for (std::size_t i : indices) {
    if (i >= c.size()) throw ConfigurationError("point index out of range");
    pts.vectors.push_back(c.exact_points()->vectors[i]);
    coords.push_back((*c.coords())[i]);
  }
  return Configuration::from_exact_points(c.dim(), c.label() + "[subset]", std::move(pts),
                                          std::move(coords));
}

struct ConfigStats {
  std::size_t size = 0;
  int dim = 0;
  std::optional<ExactScalar> t_c;
  double t_c_float = 0.0;
  std::optional<ExactScalar> d_c_squared;  // 2 - 2 t_C, exact
  double d_c = 0.0;
  std::string d_c_symbolic;
};

inline ConfigStats config_stats(const Configuration& c) {
  if (c.size() < 2) throw ConfigurationError("statistics need at least two points");
  ConfigStats s;
  s.size = c.size();
  s.dim = c.dim();
  s.t_c_float = c.t_c_float();
  if (c.is_exact()) {
    s.t_c = c.t_c();
    s.d_c_squared = ExactScalar(2) - ExactScalar(2) * *s.t_c;
    s.d_c = std::sqrt(s.d_c_squared->to_double());
    s.d_c_symbolic = "sqrt(" + s.d_c_squared->to_string() + ")";
  } else {
    s.d_c = std::sqrt(2.0 - 2.0 * s.t_c_float);
  }
  return s;
}

/// "cross-polytope:<n>", "simplex:<n>", "icosahedron" or "600-cell".
inline Configuration builtin_config(const std::string& name) {
  auto parse_dim = [&](std::string_view prefix) {
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 6) {
      throw ConfigurationError("bad dimension in '" + name + "'");
    }
    return std::stoi(rest);
  };
  if (name == "icosahedron") return make_icosahedron();
  if (name == "600-cell") return make_600cell();
  if (name.starts_with("cross-polytope:")) return make_cross_polytope(parse_dim("cross-polytope:"));
  if (name.starts_with("simplex:")) return make_simplex(parse_dim("simplex:"));
  throw ConfigurationError("unknown built-in configuration '" + name + "'");
}

}  // namespace tammes
