// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "tammes/certificate.hpp"
#include "tammes/json_io.hpp"
#include "tammes/lp_search.hpp"

#include "oracles.hpp"
#include "worked_examples.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using tammes::Certificate;
using tammes::ExactScalar;
using worked::q;
using worked::s5;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    c.ok = false;
    c.notes << " [took " << secs << " s, limit " << limit_seconds << " s]";
  }
  std::printf("%s criterion %d: %s (%.3f s)%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.notes.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

tammes::TheoremInput fixture_input(const std::string& name, const tammes::Configuration& config) {
  const auto doc =
      tammes::theorem_document_from_json(tammes::read_json_file(std::string(TAMMES_FIXTURE_DIR) + "/" + name + ".json"));
  return tammes::make_theorem_input(doc, config);
}

}  // namespace

int main() {
  criterion(1, "cross polytopes n = 2..8 are optimal with d_C^2 = 2", 1.0, [](Check& c) {
    for (int n = 2; n <= 8; ++n) {
      const tammes::TheoremInput in{tammes::make_cross_polytope(n),
                                    Certificate::from_monomial(n, q(0), worked::ex1_f()),
                                    Certificate::from_monomial(n, q(-1), worked::ex1_g()), q(-1)};
      const auto v = tammes::verify_theorem(in);
      c.expect(v.optimal, "optimal n=" + std::to_string(n));
      c.expect(v.d_squared == q(2), "d^2 n=" + std::to_string(n));
      c.notes << (n == 2 ? " f# =" : "") << " " << *v.cond_i.sharp;
    }
  });

  criterion(2, "icosahedron: f# = 12, membership, no roots in the gap, g# = 3sqrt5 - 3 < 12", 2.0, [](Check& c) {
    const auto ico = tammes::make_icosahedron();
    const ExactScalar a = worked::sqrt5_over_5();
    const Certificate f = Certificate::from_monomial(3, a, worked::ex2_f());
    c.expect(tammes::f_sharp(f) == q(12), "f# = 12");
    c.expect(tammes::check_membership(f).member, "f in P(4, sqrt5/5, 3)");
    c.expect(f.degree() == 4, "K = 4");
    c.expect(tammes::count_roots(f.monomial(), -a, a, false, false) == 0, "no roots in (-sqrt5/5, sqrt5/5)");
    const Certificate g = Certificate::from_monomial(3, -a, worked::ex2_g());
    const ExactScalar gs = tammes::f_sharp(g);
    c.expect(gs == s5(-3, 3), "g# = 3sqrt5 - 3");
    c.expect(q(12) > gs, "12 > g#");
    const auto in = fixture_input("example2", ico);
    c.expect(in.f == f, "fixture f matches factored form");
    const auto v = tammes::verify_theorem(in);
    c.expect(v.optimal, "verdict optimal");
    c.expect(std::abs(v.d - 1.0514622242) <= 1e-9, "d = 1.0514622242");
    c.notes << " g# = " << gs << ", d = " << fmt(v.d);
  });

  criterion(3, "600-cell: f# = 120, expansion matches table, g# < 120, optimal", 30.0, [](Check& c) {
    const Certificate f = Certificate::from_monomial(4, worked::phi_over_2(), worked::ex3_f());
    c.expect(tammes::f_sharp(f) == q(120), "f# = 120");
    c.expect(f.expansion().coeffs == worked::ex3_f_table(), "expansion equals tabulated coefficients");
    c.expect(f.expansion().coeff(12).is_zero() && f.expansion().coeff(13).is_zero(), "zeros at P_12, P_13");
    c.expect(tammes::check_membership(f).member, "f membership");
    const Certificate g = Certificate::from_monomial(4, q(1, 2), worked::ex3_g());
    c.expect(tammes::check_membership(g).member, "g membership");
    const ExactScalar gs = tammes::f_sharp(g);
    c.expect(gs == q(7200, 21431) * s5(323, -61), "g# = (7200/21431)(323 - 61 sqrt5)");
    c.expect(q(120) > gs, "120 > g#");
    const auto v = tammes::verify_theorem(fixture_input("example3", tammes::make_600cell()));
    c.expect(v.optimal, "verdict optimal");
    c.expect(std::abs(v.d - 0.6180339887) <= 1e-9, "d = 0.6180339887");
    c.notes << " g# = " << gs << " ~ " << fmt(gs.to_double());
  });

  criterion(4, "Gegenbauer: P_k(1) = 1, exact basis round trip, icosahedron g expansion", 0.0, [](Check& c) {
    for (int n = 2; n <= 10; ++n)
      for (int k = 0; k <= 30; ++k) c.expect(tammes::gegenbauer_poly(n, k)(q(1)) == q(1), "P_k(1)");
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> deg(0, 20), dim(2, 10);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 50);
    for (int t = 0; t < 100; ++t) {
      std::vector<ExactScalar> cs(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : cs) x = q(num(rng), den(rng));
      const tammes::Poly p(std::move(cs));
      c.expect(tammes::geg_to_monomial(tammes::monomial_to_geg(p, dim(rng))) == p, "round trip");
    }
    c.expect(tammes::monomial_to_geg(worked::ex2_g(), 3).coeffs == worked::ex2_g_table(), "icosahedron g");
  });

  criterion(5, "N <= f# over 200 random configurations for every shipped certificate", 10.0, [](Check& c) {
    std::vector<Certificate> certs;
    for (const char* name : {"example1", "example2", "example3"}) {
      const auto doc = tammes::theorem_document_from_json(
          tammes::read_json_file(std::string(TAMMES_FIXTURE_DIR) + "/" + name + ".json"));
      for (const auto* j : {&doc.f, &doc.g}) {
        if (j->contains("dim")) {
          certs.push_back(tammes::certificate_from_json(*j));
        } else {
          for (int n : {3, 4}) certs.push_back(tammes::certificate_from_json(*j, n));
        }
      }
    }
    std::vector<tammes::CheckedCertificate> checked;
    for (auto& cert : certs) checked.push_back(tammes::CheckedCertificate::check(cert));
    std::mt19937_64 pick(99);
    std::size_t applied = 0, violations = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 3 + static_cast<int>(pick() % 2);
      const std::size_t count = 2 + pick() % 29;
      const auto config = tammes::random_config(n, count, 1000 + seed);
      for (const auto& ch : checked) {
        if (ch.cert.dim() != n || !tammes::tau_covers(ch.cert, config)) continue;
        ++applied;
        if (!tammes::lemma_bound(ch, config).within_bound) ++violations;
      }
    }
    // Rotated subsets of the exact configurations reach the tight regime.
    std::size_t structured = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      std::mt19937_64 rng(seed);
      const auto base = seed % 2 ? tammes::make_600cell() : tammes::make_icosahedron();
      auto xs = oracle::rotate(*base.coords(), oracle::random_rotation(base.dim(), rng));
      std::shuffle(xs.begin(), xs.end(), rng);
      xs.resize(2 + rng() % (xs.size() - 1));
      const auto config = tammes::Configuration::from_float_coords(base.dim(), xs, "subset");
      for (const auto& ch : checked) {
        if (ch.cert.dim() != base.dim() || !tammes::tau_covers(ch.cert, config)) continue;
        ++structured;
        if (!tammes::lemma_bound(ch, config).within_bound) ++violations;
      }
    }
    c.expect(violations == 0, std::to_string(violations) + " violations");
    c.notes << " applicable pairs: " << applied << " random + " << structured << " rotated subsets, violations "
            << violations;
  });

  criterion(6, "sum_ij P_k(x_i.x_j) >= -1e-9 on 100 random configurations, k <= 10", 0.0, [](Check& c) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int n = 3 + static_cast<int>(seed % 2);
      const auto config = tammes::random_config(n, 2 + seed % 39, 5000 + seed);
      const auto& xs = *config.coords();
      std::vector<double> sums(11, 0.0);
      for (const auto& x : xs) {
        for (const auto& y : xs) {
          const auto p = tammes::gegenbauer_values(n, 10, tammes::Configuration::dot(x, y));
          for (int k = 0; k <= 10; ++k) sums[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)];
        }
      }
      for (double s : sums) worst = std::min(worst, s);
    }
    c.expect(worst >= -1e-9, "kernel sum below -1e-9");
    c.notes << " smallest sum " << worst;
  });

  criterion(7, "LP squeeze reproduces 6, 12 and 120 with dense violation <= 1e-9", 60.0, [](Check& c) {
    struct Case {
      int n;
      double tau;
      int k;
      double target, tol;
    };
    for (const Case& cs : {Case{3, 0.0, 2, 6.0, 1e-6}, Case{3, std::sqrt(5.0) / 5, 4, 12.0, 1e-6},
                           Case{4, (std::sqrt(5.0) + 1) / 4, 17, 120.0, 1e-3}}) {
      const auto r = tammes::lp_bound(cs.n, cs.tau, cs.k);
      const std::string tag = "n=" + std::to_string(cs.n) + " K=" + std::to_string(cs.k);
      c.expect(r.status == tammes::LPStatus::optimal, tag + " status");
      c.expect(std::abs(r.bound - cs.target) <= cs.tol, tag + " bound");
      c.expect(r.violation <= 1e-9, tag + " violation");
      c.notes << " " << fmt(r.bound);
    }
  });

  criterion(8, "rationalized (3, 0, 2) LP certificate is a member with f# = 6", 0.0, [](Check& c) {
    const auto lp = tammes::lp_bound(3, 0.0, 2);
    const auto r = tammes::rationalize_certificate(lp, 3, q(0), 100);
    c.expect(r.certificate.has_value(), "rationalization failed: " + r.failure);
    if (!r.certificate) return;
    c.expect(tammes::check_membership(*r.certificate).member, "membership");
    c.expect(tammes::f_sharp(*r.certificate) == q(6), "f# = 6");
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
