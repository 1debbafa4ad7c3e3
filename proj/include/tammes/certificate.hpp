#pragma once

// Delsarte certificates: membership in the class P(K, tau, n), the bound
// f# = f(1)/c_0, the counting inequality N <= f# for a configuration, and the
// three-condition optimality verdict for the Tammes problem.

#include "tammes/configuration.hpp"
#include "tammes/gegenbauer.hpp"
#include "tammes/sturm.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial in the Gegenbauer basis for S^(dim-1) together with the
/// threshold tau on which it should be nonpositive.  Membership conditions
/// are not enforced on construction; see check_membership.
class Certificate {
 public:
  static Certificate from_gegenbauer(int dim, ExactScalar tau, std::vector<ExactScalar> coeffs) {
    GegExpansion e(dim, std::move(coeffs));
    Poly mono = geg_to_monomial(e);
    return Certificate(dim, std::move(tau), std::move(e), std::move(mono));
  }
  static Certificate from_monomial(int dim, ExactScalar tau, Poly p) {
    GegExpansion e = monomial_to_geg(p, dim);
    return Certificate(dim, std::move(tau), std::move(e), std::move(p));
  }

  int dim() const { return dim_; }
  const ExactScalar& tau() const { return tau_; }
  const GegExpansion& expansion() const { return expansion_; }
  const Poly& monomial() const { return monomial_; }
  /// Index of the last nonzero Gegenbauer coefficient.
  int degree() const { return expansion_.degree(); }
  ExactScalar c0() const { return expansion_.coeff(0); }

  Certificate with_tau(ExactScalar tau) const {
    return Certificate(dim_, std::move(tau), expansion_, monomial_);
  }
  Certificate scaled(const ExactScalar& lambda) const {
    std::vector<ExactScalar> c;
    for (const auto& x : expansion_.coeffs) c.push_back(x * lambda);
    return from_gegenbauer(dim_, tau_, std::move(c));
  }

  friend bool operator==(const Certificate& x, const Certificate& y) {
    return x.dim_ == y.dim_ && x.tau_ == y.tau_ && x.expansion_ == y.expansion_;
  }

 private:
  Certificate(int dim, ExactScalar tau, GegExpansion e, Poly mono)
      : dim_(dim), tau_(std::move(tau)), expansion_(std::move(e)), monomial_(std::move(mono)) {
    if (tau_ < ExactScalar(-1) || !(tau_ < ExactScalar(1))) {
      throw std::invalid_argument("certificate tau " + tau_.to_string() + " outside [-1, 1)");
    }
  }

  int dim_ = 2;
  ExactScalar tau_;
  GegExpansion expansion_;
  Poly monomial_;
};

/// f(1) / c_0.
inline ExactScalar f_sharp(const Certificate& cert) {
  if (cert.c0().is_zero()) throw std::domain_error("f#: constant Gegenbauer coefficient is zero");
  return cert.monomial()(ExactScalar(1)) / cert.c0();
}

struct MembershipReport {
  bool member = false;
  bool coefficients_ok = false;
  std::optional<std::size_t> violated_index;  // first c_i breaking c_0 > 0, c_i >= 0
  bool nonpositive_ok = false;
  std::optional<ExactScalar> witness;  // point in [-1, tau] with f > 0
  int interior_roots = 0;
  std::string failure;
};

/// Checks c_0 > 0, c_i >= 0 (i >= 1) and f <= 0 on [-1, tau], all exactly.
inline MembershipReport check_membership(const Certificate& cert, const std::stop_token& stop = {}) {
  MembershipReport r;
  const auto& c = cert.expansion().coeffs;
  r.coefficients_ok = true;
  if (c.empty() || c[0].sign() <= 0) {
    r.coefficients_ok = false;
    r.violated_index = 0;
    r.failure = "c_0 must be positive";
  } else {
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i].sign() < 0) {
        r.coefficients_ok = false;
        r.violated_index = i;
        r.failure = "c_" + std::to_string(i) + " = " + c[i].to_string() + " is negative";
        break;
      }
    }
  }
  const auto np = is_nonpositive_on(cert.monomial(), ExactScalar(-1), cert.tau(), stop);
  r.nonpositive_ok = np.holds;
  r.interior_roots = np.interior_roots;
  r.witness = np.witness;
  if (!np.holds && r.failure.empty()) {
    r.failure = "f(" + np.witness->to_string() + ") > 0 inside [-1, tau]";
  }
  r.member = r.coefficients_ok && r.nonpositive_ok;
  return r;
}

/// A certificate paired with its membership result, so repeated use (for
/// many configurations) does not redo the Sturm work.
struct CheckedCertificate {
  Certificate cert;
  MembershipReport membership;

  static CheckedCertificate check(Certificate cert, const std::stop_token& stop = {}) {
    auto report = check_membership(cert, stop);
    return {std::move(cert), std::move(report)};
  }
};

enum class ZeroCheck { pass, fail, skipped };

inline const char* to_string(ZeroCheck z) {
  switch (z) {
    case ZeroCheck::pass: return "pass";
    case ZeroCheck::fail: return "fail";
    case ZeroCheck::skipped: return "skipped";
  }
  return "?";
}

struct LemmaReport {
  ExactScalar bound;  // f#
  std::size_t n_points = 0;
  bool within_bound = false;  // N <= f#
  bool tight = false;         // N == f#
  ZeroCheck zero_check = ZeroCheck::skipped;
  std::optional<ExactScalar> nonzero_at;  // a Gram value with f(s) != 0 when the check fails
};

/// Tolerance for the tight-case zero check on float-only configurations.
inline constexpr double kFloatZeroTolerance = 1e-9;
/// Float inner products carry rounding error, so a float-only t_C may exceed
/// tau by this much and still count as covered.
inline constexpr double kFloatCoverTolerance = 1e-12;

/// tau >= t_C: exact for exact configurations, within kFloatCoverTolerance
/// otherwise.  Configurations with fewer than two points are always covered.
inline bool tau_covers(const Certificate& cert, const Configuration& config) {
  if (config.size() < 2) return true;
  if (config.is_exact()) return !(cert.tau() < config.t_c());
  return config.t_c_float() <= cert.tau().to_double() + kFloatCoverTolerance;
}

/// N <= f#, and when N == f#, f vanishes on every off-diagonal Gram value.
/// Float-only configurations are compared against tau in double precision.
inline LemmaReport lemma_bound(const CheckedCertificate& checked, const Configuration& config) {
  const Certificate& cert = checked.cert;
  if (!checked.membership.member) {
    throw PreconditionError("lemma_bound: certificate is not in P(K, tau, n): " + checked.membership.failure);
  }
  if (cert.dim() != config.dim()) {
    throw PreconditionError("lemma_bound: dimension mismatch " + std::to_string(cert.dim()) + " vs " +
                            std::to_string(config.dim()));
  }
  if (!tau_covers(cert, config)) throw PreconditionError("lemma_bound: tau is below the configuration's t_C");
  LemmaReport r;
  r.bound = f_sharp(cert);
  r.n_points = config.size();
  const ExactScalar n(static_cast<long>(config.size()));
  r.within_bound = !(r.bound < n);
  r.tight = r.bound == n;
  if (!r.tight) return r;
  r.zero_check = ZeroCheck::pass;
  if (config.is_exact()) {
    for (const auto& g : config.spectrum()) {
      if (!cert.monomial()(g.value).is_zero()) {
        r.zero_check = ZeroCheck::fail;
        r.nonzero_at = g.value;
        break;
      }
    }
  } else {
    const auto coeffs = to_double_coeffs(cert.monomial());
    for (const auto& g : config.float_spectrum()) {
      if (std::abs(horner(coeffs, g.value)) > kFloatZeroTolerance) {
        r.zero_check = ZeroCheck::fail;
        break;
      }
    }
  }
  return r;
}

inline LemmaReport lemma_bound(const Certificate& cert, const Configuration& config,
                               const std::stop_token& stop = {}) {
  return lemma_bound(CheckedCertificate::check(cert, stop), config);
}

struct TheoremInput {
  Configuration config;
  Certificate f;  // tau = t_C
  Certificate g;  // tau = t2
  ExactScalar t2;
};

struct BoundCondition {
  bool pass = false;
  MembershipReport membership;
  ExactScalar at_one;  // f(1) or g(1)
  ExactScalar c0;
  std::optional<ExactScalar> sharp;
  int degree = 0;
};

struct RootCondition {
  bool pass = false;
  int root_count = 0;  // distinct roots of f in the open interval (t2, t_C)
  ExactScalar lo;
  ExactScalar hi;
};

struct Verdict {
  bool optimal = false;
  int dim = 0;
  std::size_t n_points = 0;
  ExactScalar t_c;
  ExactScalar d_squared;  // 2 - 2 t_C
  double d = 0.0;
  BoundCondition cond_i;    // f in P(K1, t_C, n) and N == f#
  RootCondition cond_ii;    // f != 0 on (t2, t_C)
  BoundCondition cond_iii;  // g in P(K2, t2, n) and N > g#
  std::vector<std::string> failed;
};

namespace detail {

inline BoundCondition bound_condition(const Certificate& cert, const std::stop_token& stop) {
  BoundCondition b;
  b.membership = check_membership(cert, stop);
  b.at_one = cert.monomial()(ExactScalar(1));
  b.c0 = cert.c0();
  b.degree = cert.degree();
  if (!b.c0.is_zero()) b.sharp = b.at_one / b.c0;
  return b;
}

}  // namespace detail

/// Decides the three optimality conditions exactly.  Throws
/// PreconditionError on malformed input (dimension mismatch, t2 outside
/// [-1, t_C), thresholds that disagree with t_C / t2, inexact configuration).
inline Verdict verify_theorem(const TheoremInput& in, const std::stop_token& stop = {}) {
  const Configuration& c = in.config;
  if (in.f.dim() != c.dim() || in.g.dim() != c.dim()) {
    throw PreconditionError("dimension mismatch: configuration " + std::to_string(c.dim()) + ", f " +
                            std::to_string(in.f.dim()) + ", g " + std::to_string(in.g.dim()));
  }
  if (!c.is_exact()) throw PreconditionError("theorem verification needs an exact configuration");
  if (c.size() < 2) throw PreconditionError("theorem verification needs at least two points");
  const ExactScalar& t_c = c.t_c();
  if (in.t2 < ExactScalar(-1) || !(in.t2 < t_c)) {
    throw PreconditionError("t2 = " + in.t2.to_string() + " must lie in [-1, t_C) with t_C = " +
                            t_c.to_string());
  }
  if (!(in.f.tau() == t_c)) {
    throw PreconditionError("f.tau = " + in.f.tau().to_string() + " differs from t_C = " + t_c.to_string());
  }
  if (!(in.g.tau() == in.t2)) {
    throw PreconditionError("g.tau = " + in.g.tau().to_string() + " differs from t2 = " + in.t2.to_string());
  }

  Verdict v;
  v.dim = c.dim();
  v.n_points = c.size();
  v.t_c = t_c;
  v.d_squared = ExactScalar(2) - ExactScalar(2) * t_c;
  v.d = std::sqrt(v.d_squared.to_double());
  const ExactScalar n(static_cast<long>(c.size()));

  v.cond_i = detail::bound_condition(in.f, stop);
  v.cond_i.pass = v.cond_i.membership.member && v.cond_i.sharp && *v.cond_i.sharp == n;

  v.cond_ii.lo = in.t2;
  v.cond_ii.hi = t_c;
  v.cond_ii.root_count = in.f.monomial().is_zero()
                             ? -1
                             : count_roots(in.f.monomial(), in.t2, t_c, false, false, stop);
  v.cond_ii.pass = v.cond_ii.root_count == 0;

  v.cond_iii = detail::bound_condition(in.g, stop);
  v.cond_iii.pass = v.cond_iii.membership.member && v.cond_iii.sharp && n > *v.cond_iii.sharp;

  if (!v.cond_i.pass) v.failed.emplace_back("i");
  if (!v.cond_ii.pass) v.failed.emplace_back("ii");
  if (!v.cond_iii.pass) v.failed.emplace_back("iii");
  v.optimal = v.failed.empty();
  return v;
}

}  // namespace tammes
