#pragma once

// Exact arithmetic in a real quadratic field Q[sqrt(m)].
//
// An ExactScalar is a + b*sqrt(m) with a, b arbitrary-precision rationals and
// m a square-free integer >= 2.  When b == 0 the value is rational and the
// radicand only records the field context it came from; it takes no part in
// equality or ordering.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tammes {

using Rational = mpq_class;
using Integer = mpz_class;

class RadicandMismatch : public std::domain_error {
 public:
  RadicandMismatch(std::int64_t lhs, std::int64_t rhs)
      : std::domain_error("radicand mismatch: sqrt(" + std::to_string(lhs) +
                          ") vs sqrt(" + std::to_string(rhs) + ")") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_square_free(std::int64_t m) {
  if (m < 1) return false;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `INT ("/" INT)?` with an optional leading sign.  Whitespace around
/// the tokens is ignored.
inline Rational parse_rational(std::string_view text) {
  std::string num;
  std::string den;
  std::string* cur = &num;
  bool seen_digit = false;
  bool gap = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = seen_digit;
      continue;
    }
    if (gap && std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("stray space in rational '" + std::string(text) + "'");
    }
    gap = false;
    if ((c == '+' || c == '-') && cur->empty()) {
      if (c == '-') cur->push_back('-');
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
      seen_digit = true;
      continue;
    }
    if (c == '/' && cur == &num && seen_digit) {
      cur = &den;
      seen_digit = false;
      continue;
    }
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  if (!seen_digit) throw ParseError("bad rational '" + std::string(text) + "'");
  Integer n(num, 10);
  Integer d(1);
  if (cur == &den) {
    if (den.front() == '-') throw ParseError("negative denominator in '" + std::string(text) + "'");
    d = Integer(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Positive rational r such that q / r has integer entries with gcd 1
/// (for a nonzero input); returns 1 for an all-zero input.
inline Rational rational_content(std::span<const Rational> values) {
  Integer g = 0;
  Integer l = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  }
  if (g == 0) return Rational(1);
  Rational r(abs(g), l);
  r.canonicalize();
  return r;
}

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : a_(v) {}                   // NOLINT(google-explicit-constructor)
  ExactScalar(long v) : a_(v) {}                  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a) : a_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b, std::int64_t radicand)
      : a_(std::move(a)), b_(std::move(b)), m_(radicand) {
    if (m_ < 1) throw std::invalid_argument("radicand must be positive");
    if (b_ != 0 && (m_ < 2 || !is_square_free(m_))) {
      throw std::invalid_argument("radicand " + std::to_string(m_) +
                                  " must be square-free and >= 2");
    }
  }

  static ExactScalar sqrt_of(std::int64_t m) { return {Rational(0), Rational(1), m}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  std::int64_t radicand() const { return m_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  ExactScalar conjugate() const { return {a_, -b_, m_}; }
  /// Field norm a^2 - m b^2, zero only for zero.
  Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

  int sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const int cmp_sq = cmp(a_ * a_, Rational(m_) * b_ * b_);
    return cmp_sq > 0 ? sa : sb;
  }

  ExactScalar operator-() const { return {-a_, -b_, m_}; }

  ExactScalar& operator+=(const ExactScalar& y) {
    m_ = join(*this, y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& y) {
    m_ = join(*this, y);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& y) {
    const std::int64_t m = join(*this, y);
    Rational a = a_ * y.a_;
    if (b_ != 0 && y.b_ != 0) a += Rational(m) * b_ * y.b_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    m_ = m;
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    const std::int64_t m = join(*this, y);
    if (y.b_ == 0) {
      a_ /= y.a_;
      b_ /= y.a_;
      m_ = m;
      return *this;
    }
    const Rational n = y.norm();
    ExactScalar num = *this;
    num *= y.conjugate();
    a_ = num.a_ / n;
    b_ = num.b_ / n;
    m_ = m;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.m_ != y.m_) throw RadicandMismatch(x.m_, y.m_);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Nearest double, computed without cancellation: when a and b*sqrt(m)
  /// have opposite signs the value is evaluated as (a^2 - m b^2)/(a - b sqrt m).
  double to_double() const {
    const double root = std::sqrt(static_cast<double>(m_));
    double v = 0.0;
    if (b_ == 0) {
      v = a_.get_d();
    } else if (sgn(a_) == 0 || sgn(a_) == sgn(b_)) {
      v = a_.get_d() + b_.get_d() * root;
    } else {
      const double den = a_.get_d() - b_.get_d() * root;
      const double num = overflows(norm()) ? HUGE_VAL : norm().get_d();
      v = std::isfinite(num) ? num / den : a_.get_d() + b_.get_d() * root;
    }
    if (!std::isfinite(v) || overflows(a_) || overflows(b_)) {
      throw std::overflow_error("exact scalar " + to_string() + " does not fit in a double");
    }
    return v;
  }

  /// Canonical text: "p/q", "r/s*sqrt(m)" or "p/q + r/s*sqrt(m)".
  std::string to_string() const {
    if (b_ == 0) return format_rational(a_);
    const std::string root = "*sqrt(" + std::to_string(m_) + ")";
    if (a_ == 0) return format_rational(b_) + root;
    const std::string op = sgn(b_) < 0 ? " - " : " + ";
    return format_rational(a_) + op + format_rational(abs(b_)) + root;
  }

  /// Accepts `RAT`, `RAT*sqrt(m)`, `sqrt(m)`, and `RAT (+|-) RAT*sqrt(m)`.
  static ExactScalar parse(std::string_view text) {
    // Spaces may surround operators but never split a number or a name.
    auto wordy = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '/'; };
    std::string s;
    bool gap = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        gap = true;
        continue;
      }
      if (gap && !s.empty() && wordy(s.back()) && wordy(c)) {
        throw ParseError("stray space in scalar '" + std::string(text) + "'");
      }
      gap = false;
      s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty scalar");
    const auto sq = s.find("sqrt(");
    if (sq == std::string::npos) return ExactScalar(parse_rational(s));

    const auto close = s.find(')', sq);
    if (close == std::string::npos || close + 1 != s.size()) {
      throw ParseError("bad scalar '" + std::string(text) + "'");
    }
    const std::string radicand_text = s.substr(sq + 5, close - sq - 5);
    if (radicand_text.empty() ||
        radicand_text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad radicand in '" + std::string(text) + "'");
    }
    const std::int64_t m = std::stoll(radicand_text);

    // Coefficient of the root: the text between the split sign and "*sqrt(".
    std::string head = s.substr(0, sq);
    Rational b(1);
    std::string rat_part;
    if (!head.empty() && head.back() == '*') {
      head.pop_back();
      // Find the sign that separates the rational part from the root coefficient.
      std::size_t split = std::string::npos;
      for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
          split = i;
          break;
        }
      }
      std::string coef = split == std::string::npos ? head : head.substr(split);
      rat_part = split == std::string::npos ? "" : head.substr(0, split);
      if (coef == "+" || coef == "-" || coef.empty()) {
        throw ParseError("bad root coefficient in '" + std::string(text) + "'");
      }
      b = parse_rational(coef);
    } else {
      // Bare "sqrt(m)", possibly preceded by a sign and a rational part.
      if (head.empty() || head == "+") {
        b = 1;
      } else if (head == "-") {
        b = -1;
      } else {
        const char last = head.back();
        if (last != '+' && last != '-') {
          throw ParseError("bad scalar '" + std::string(text) + "'");
        }
        b = last == '-' ? -1 : 1;
        rat_part = head.substr(0, head.size() - 1);
      }
    }
    Rational a(0);
    if (!rat_part.empty()) a = parse_rational(rat_part);
    if (b == 0) return ExactScalar(a, Rational(0), std::max<std::int64_t>(m, 1));
    if (m < 2 || !is_square_free(m)) {
      throw ParseError("radicand " + std::to_string(m) + " must be square-free and >= 2");
    }
    return {a, b, m};
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.to_string();
  }

 private:
  static std::int64_t join(const ExactScalar& x, const ExactScalar& y) {
    if (x.b_ != 0 && y.b_ != 0) {
      if (x.m_ != y.m_) throw RadicandMismatch(x.m_, y.m_);
      return x.m_;
    }
    if (x.b_ != 0) return x.m_;
    if (y.b_ != 0) return y.m_;
    return x.m_ > 1 ? x.m_ : y.m_;
  }

  static bool overflows(const Rational& q) {
    // Exponent of |q| in base 2, roughly; doubles top out near 2^1024.
    if (q == 0) return false;
    const long bits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    return bits > 1023;
  }

  Rational a_{0};
  Rational b_{0};
  std::int64_t m_ = 1;
};

inline int sign_of(const ExactScalar& x) { return x.sign(); }

inline double to_double(const ExactScalar& x) { return x.to_double(); }
inline double to_double(const Rational& q) { return q.get_d(); }

/// Positive rational r with every (a_i, b_i)/r integral and jointly coprime.
inline ExactScalar rational_content(std::span<const ExactScalar> values) {
  std::vector<Rational> parts;
  parts.reserve(values.size() * 2);
  for (const auto& v : values) {
    parts.push_back(v.rational_part());
    parts.push_back(v.sqrt_part());
  }
  return ExactScalar(rational_content(std::span<const Rational>(parts)));
}

}  // namespace tammes
