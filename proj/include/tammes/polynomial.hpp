#pragma once

// Dense univariate polynomials over an exact ordered field.

#include "tammes/exact_scalar.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tammes {

template <class F>
concept OrderedField = std::regular<F> && requires(F x, F y) {
  { x + y } -> std::convertible_to<F>;
  { x - y } -> std::convertible_to<F>;
  { x * y } -> std::convertible_to<F>;
  { x / y } -> std::convertible_to<F>;
  { -x } -> std::convertible_to<F>;
  { sign_of(x) } -> std::convertible_to<int>;
};

/// Coefficients are stored lowest degree first with trailing zeros trimmed;
/// the zero polynomial has no coefficients.
template <OrderedField F>
class Polynomial {
 public:
  using value_type = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }
  static Polynomial monomial(std::size_t degree, F c = F(1)) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// The linear factor (t - root).
  static Polynomial linear_factor(const F& root) { return Polynomial{-root, F(1)}; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const F> coeffs() const { return coeffs_; }
  const F& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d.push_back(coeffs_[i] * F(static_cast<long>(i)));
    }
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + q.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - q.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const F& c) {
    for (auto& x : coeffs_) x = x * c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const F& c) { return p *= c; }
  friend Polynomial operator*(const F& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> r(p.coeffs_.size() + q.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (sign_of(p.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        r[i + j] = r[i + j] + p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && sign_of(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

using Poly = Polynomial<ExactScalar>;

template <OrderedField F>
struct DivMod {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Euclidean division over the field.
template <OrderedField F>
DivMod<F> divmod(const Polynomial<F>& num, const Polynomial<F>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {{}, num};
  std::vector<F> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  std::vector<F> quo(static_cast<std::size_t>(num.degree() - dd + 1), F(0));
  const F& lead = den.leading();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const F q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (sign_of(q) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = slot - q * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

/// Division that must leave no remainder.
template <OrderedField F>
Polynomial<F> exact_quotient(const Polynomial<F>& num, const Polynomial<F>& den) {
  auto qr = divmod(num, den);
  if (!qr.remainder.is_zero()) throw std::logic_error("polynomial division is not exact");
  return std::move(qr.quotient);
}

/// Divides by the positive rational content; the sign pattern is preserved.
template <OrderedField F>
Polynomial<F> primitive_part(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  const F content = rational_content(p.coeffs());
  std::vector<F> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / content);
  return Polynomial<F>(std::move(out));
}

template <OrderedField F>
Polynomial<F> make_monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  const F lead = p.leading();
  std::vector<F> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / lead);
  return Polynomial<F>(std::move(out));
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <OrderedField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Polynomial<F> r = primitive_part(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// p / gcd(p, p'): same distinct roots, all simple.
template <OrderedField F>
Polynomial<F> squarefree_part(const Polynomial<F>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Polynomial<F>::constant(F(1));
  const auto g = gcd(p, p.derivative());
  return primitive_part(exact_quotient(p, g));
}

/// Comma-separated coefficients, lowest degree first ("0, 1" is t).
template <OrderedField F>
std::string format_poly(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::same_as<F, ExactScalar>) {
      out += p.coeffs()[i].to_string();
    } else {
      std::ostringstream os;
      os << p.coeffs()[i];
      out += os.str();
    }
  }
  return out;
}

inline Poly parse_poly(std::string_view text) {
  std::vector<ExactScalar> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    coeffs.push_back(ExactScalar::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

/// Human-readable monomial form, e.g. "t^2 + 3/2*t - 1/2", highest degree first.
inline std::string pretty_poly(const Poly& p, std::string_view var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const ExactScalar& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string term;
    const bool negative_rational = c.is_rational() && c.sign() < 0;
    const ExactScalar shown = negative_rational ? -c : c;
    const bool unit = shown == ExactScalar(1);
    if (i == 0 || !unit) {
      term = shown.is_rational() ? shown.to_string() : "(" + shown.to_string() + ")";
    }
    if (i > 0) {
      if (!term.empty()) term += "*";
      term += std::string(var);
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = negative_rational ? "-" + term : term;
    } else {
      out += negative_rational ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

/// Coefficients rounded to double, for float cross-checks only.
template <OrderedField F>
std::vector<double> to_double_coeffs(const Polynomial<F>& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

inline double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace tammes
