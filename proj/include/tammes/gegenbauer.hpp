#pragma once

// Gegenbauer polynomials P_k^(n) for the sphere S^(n-1), normalized so that
// P_k^(n)(1) = 1, built from the three-term recurrence
//
//   P_0 = 1,  P_1 = t,
//   P_(k+1) = ((2k + n - 2) t P_k - k P_(k-1)) / (k + n - 2),
//
// plus exact conversion between the monomial and Gegenbauer bases.

#include "tammes/polynomial.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

namespace detail {

inline void check_gegenbauer_args(int n, int k) {
  if (n < 2) throw std::invalid_argument("Gegenbauer dimension must be >= 2, got " + std::to_string(n));
  if (k < 0) throw std::invalid_argument("Gegenbauer degree must be >= 0, got " + std::to_string(k));
}

// Memo of P_0..P_k per dimension.  Entries are only ever appended, and a
// std::map keeps node addresses stable, so references handed out stay valid.
class GegenbauerCache {
 public:
  static constexpr std::size_t kRowCapacity = 64;

  const Poly& get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(n);
      if (it != table_.end() && static_cast<int>(it->second.size()) > k) {
        return it->second[static_cast<std::size_t>(k)];
      }
    }
    std::unique_lock lock(mutex_);
    auto& row = table_[n];
    if (row.empty()) {
      row.reserve(kRowCapacity);
      row.push_back(Poly::constant(ExactScalar(1)));
      row.push_back(Poly{ExactScalar(0), ExactScalar(1)});
    }
    const Poly t{ExactScalar(0), ExactScalar(1)};
    while (static_cast<int>(row.size()) <= k) {
      const long j = static_cast<long>(row.size()) - 1;  // building P_(j+1)
      Poly next = (t * row[static_cast<std::size_t>(j)]) * ExactScalar(2 * j + n - 2);
      next -= row[static_cast<std::size_t>(j - 1)] * ExactScalar(j);
      next *= ExactScalar(Rational(Integer(1), Integer(j + n - 2)));
      // Growing past the reservation would move elements callers still reference.
      if (row.size() == row.capacity()) {
        throw std::length_error("Gegenbauer cache row capacity exceeded");
      }
      row.push_back(std::move(next));
    }
    return row[static_cast<std::size_t>(k)];
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::vector<Poly>> table_;
};

inline GegenbauerCache& gegenbauer_cache() {
  static GegenbauerCache cache;
  return cache;
}

}  // namespace detail

/// Highest degree served by the memo.
inline constexpr int kMaxGegenbauerDegree =
    static_cast<int>(detail::GegenbauerCache::kRowCapacity) - 1;

/// Exact monomial-basis P_k^(n).
inline const Poly& gegenbauer_poly(int n, int k) {
  detail::check_gegenbauer_args(n, k);
  if (k > kMaxGegenbauerDegree) {
    throw std::invalid_argument("Gegenbauer degree above " + std::to_string(kMaxGegenbauerDegree));
  }
  return detail::gegenbauer_cache().get(n, k);
}

/// Values P_0^(n)(t), ..., P_K^(n)(t) in double precision by the same
/// recurrence.
inline std::vector<double> gegenbauer_values(int n, int max_degree, double t) {
  detail::check_gegenbauer_args(n, max_degree);
  std::vector<double> v(static_cast<std::size_t>(max_degree) + 1);
  v[0] = 1.0;
  if (max_degree >= 1) v[1] = t;
  for (int j = 1; j < max_degree; ++j) {
    v[static_cast<std::size_t>(j + 1)] =
        ((2.0 * j + n - 2) * t * v[static_cast<std::size_t>(j)] - j * v[static_cast<std::size_t>(j - 1)]) /
        (j + n - 2);
  }
  return v;
}

inline double gegenbauer_value(int n, int k, double t) {
  return gegenbauer_values(n, k, t)[static_cast<std::size_t>(k)];
}

/// f = sum_i coeffs[i] * P_i^(dim).
struct GegExpansion {
  int dim = 2;
  std::vector<ExactScalar> coeffs;

  GegExpansion() = default;
  GegExpansion(int n, std::vector<ExactScalar> c) : dim(n), coeffs(std::move(c)) {
    detail::check_gegenbauer_args(n, 0);
    trim();
  }

  /// Index of the last nonzero coefficient; -1 when all are zero.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  ExactScalar coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : ExactScalar(0); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  friend bool operator==(const GegExpansion&, const GegExpansion&) = default;
};

inline Poly geg_to_monomial(const GegExpansion& e) {
  Poly out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (e.coeffs[i].is_zero()) continue;
    out += gegenbauer_poly(e.dim, static_cast<int>(i)) * e.coeffs[i];
  }
  return out;
}

/// Unique expansion of p in the P_k^(n): peel off the leading monomial with
/// a multiple of P_deg^(n), whose leading coefficient is never zero.
inline GegExpansion monomial_to_geg(const Poly& p, int n) {
  detail::check_gegenbauer_args(n, 0);
  if (p.is_zero()) return GegExpansion(n, {});
  std::vector<ExactScalar> c(static_cast<std::size_t>(p.degree()) + 1, ExactScalar(0));
  Poly rest = p;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    const Poly& basis = gegenbauer_poly(n, d);
    const ExactScalar factor = rest.leading() / basis.leading();
    c[static_cast<std::size_t>(d)] = factor;
    rest -= basis * factor;
    if (!rest.is_zero() && rest.degree() >= d) {
      throw std::logic_error("monomial_to_geg: leading term did not cancel");
    }
  }
  return GegExpansion(n, std::move(c));
}

}  // namespace tammes
