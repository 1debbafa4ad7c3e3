#pragma once

// Sturm sequences, exact distinct-root counting and root isolation, and the
// exact "p <= 0 on [lo, hi]" decision built on them.

#include "tammes/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <vector>

namespace tammes {

class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("operation cancelled") {}
};

inline void throw_if_cancelled(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Cancelled();
}

/// Chain p, p', -rem(p, p'), ... of a squarefree polynomial.  Every element
/// is divided by its positive rational content, which leaves the sign
/// variations unchanged.
template <OrderedField F>
class SturmChain {
 public:
  explicit SturmChain(const Polynomial<F>& squarefree, const std::stop_token& stop = {}) {
    if (squarefree.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(squarefree));
    if (squarefree.degree() == 0) return;
    chain_.push_back(primitive_part(squarefree.derivative()));
    while (chain_.back().degree() > 0) {
      throw_if_cancelled(stop);
      const auto& prev2 = chain_[chain_.size() - 2];
      const auto& prev1 = chain_.back();
      Polynomial<F> r = -divmod(prev2, prev1).remainder;
      if (r.is_zero()) break;
      chain_.push_back(primitive_part(r));
    }
  }

  std::span<const Polynomial<F>> polys() const { return chain_; }
  std::size_t size() const { return chain_.size(); }

  /// Sign changes along the chain at x, zeros skipped.
  int variations(const F& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign_of(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in the half-open interval (lo, hi].  Valid for any
  /// lo < hi, root or not, because the chain comes from a squarefree input.
  int roots_half_open(const F& lo, const F& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<Polynomial<F>> chain_;
};

/// Distinct real roots of p in the interval between lo and hi, with each
/// endpoint included or excluded as requested.
template <OrderedField F>
int count_roots(const Polynomial<F>& p, const F& lo, const F& hi, bool include_lo, bool include_hi,
                const std::stop_token& stop = {}) {
  if (p.is_zero()) throw std::domain_error("count_roots: identically zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_roots: requires lo < hi");
  const SturmChain<F> chain(squarefree_part(p), stop);
  const bool hi_root = sign_of(p(hi)) == 0;
  const bool lo_root = sign_of(p(lo)) == 0;
  int n = chain.roots_half_open(lo, hi);
  if (hi_root && !include_hi) --n;
  if (lo_root && include_lo) ++n;
  return n;
}

/// One real root located either exactly or inside an open interval whose
/// endpoints are not roots.
template <OrderedField F>
struct RootBracket {
  F lo;
  F hi;
  bool exact = false;  // lo == hi == the root
};

namespace detail {

template <OrderedField F>
F midpoint(const F& a, const F& b) {
  return (a + b) / F(2);
}

template <OrderedField F>
class Isolator {
 public:
  Isolator(const Polynomial<F>& sqf, const std::stop_token& stop)
      : p_(sqf), chain_(sqf, stop), stop_(stop) {}

  int open_count(const F& a, const F& b) const {
    int n = chain_.roots_half_open(a, b);
    if (is_root(b)) --n;
    return n;
  }
  bool is_root(const F& x) const { return sign_of(p_(x)) == 0; }

  void isolate(const F& a, const F& b, std::vector<RootBracket<F>>& out) const {
    throw_if_cancelled(stop_);
    const int n = open_count(a, b);
    if (n == 0) return;
    if (n == 1 && !is_root(a) && !is_root(b)) {
      out.push_back({a, b, false});
      return;
    }
    if (n == 1) {
      // One root strictly inside, but an endpoint is itself a root: shrink.
      F lo = a;
      F hi = b;
      while (true) {
        throw_if_cancelled(stop_);
        const F m = midpoint(lo, hi);
        if (is_root(m)) {
          out.push_back({m, m, true});
          return;
        }
        if (open_count(lo, m) == 1) {
          hi = m;
        } else {
          lo = m;
        }
        if (!is_root(lo) && !is_root(hi)) {
          out.push_back({lo, hi, false});
          return;
        }
      }
    }
    const F m = midpoint(a, b);
    isolate(a, m, out);
    if (is_root(m)) out.push_back({m, m, true});
    isolate(m, b, out);
  }

 private:
  Polynomial<F> p_;
  SturmChain<F> chain_;
  std::stop_token stop_;
};

}  // namespace detail

/// Brackets for every distinct root of p in the open interval (lo, hi),
/// sorted ascending.
template <OrderedField F>
std::vector<RootBracket<F>> isolate_roots(const Polynomial<F>& p, const F& lo, const F& hi,
                                          const std::stop_token& stop = {}) {
  if (p.is_zero()) throw std::domain_error("isolate_roots: identically zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("isolate_roots: requires lo < hi");
  std::vector<RootBracket<F>> out;
  const detail::Isolator<F> iso(squarefree_part(p), stop);
  iso.isolate(lo, hi, out);
  return out;
}

template <OrderedField F>
struct NonpositivityResult {
  bool holds = false;
  std::optional<F> witness;  // a point with p(witness) > 0 when !holds
  int interior_roots = 0;    // distinct roots in the open interval
};

/// Exact decision of p(t) <= 0 for all t in [lo, hi].  Roots inside the
/// interval are isolated; p is then sampled once in every gap between
/// consecutive roots and at both endpoints.
template <OrderedField F>
NonpositivityResult<F> is_nonpositive_on(const Polynomial<F>& p, const F& lo, const F& hi,
                                         const std::stop_token& stop = {}) {
  if (hi < lo) throw std::invalid_argument("is_nonpositive_on: requires lo <= hi");
  NonpositivityResult<F> result;
  auto positive_at = [&](const F& x) {
    if (sign_of(p(x)) > 0) {
      result.holds = false;
      result.witness = x;
      return true;
    }
    return false;
  };
  if (positive_at(lo) || positive_at(hi)) return result;
  if (lo == hi || p.is_zero()) {
    result.holds = true;
    return result;
  }

  const auto roots = isolate_roots(p, lo, hi, stop);
  result.interior_roots = static_cast<int>(roots.size());
  // Gap boundaries: lo, each bracket, hi.  Any point strictly between two
  // consecutive boundaries lies in a root-free gap.
  F left = lo;
  for (const auto& r : roots) {
    throw_if_cancelled(stop);
    // Equal boundaries are a shared bisection point, which is never a root.
    const F sample = left < r.lo ? detail::midpoint(left, r.lo) : left;
    if (positive_at(sample)) return result;
    left = r.hi;
  }
  if (left < hi && positive_at(detail::midpoint(left, hi))) return result;
  result.holds = true;
  return result;
}

}  // namespace tammes
