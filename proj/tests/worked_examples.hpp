#pragma once

// Certificates of the worked examples, built from their factored forms, and
// the reference Gegenbauer coefficient tables they are checked against.

#include "oracles.hpp"
#include "tammes/gegenbauer.hpp"

#include <utility>
#include <vector>

namespace worked {

using tammes::ExactScalar;
using tammes::Integer;
using tammes::Poly;
using tammes::Rational;

inline ExactScalar q(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return ExactScalar(x);
}

/// a + b sqrt5 with rational a, b.
inline ExactScalar s5(const ExactScalar& a, const ExactScalar& b) {
  return ExactScalar(a.rational_part(), b.rational_part(), 5);
}
inline ExactScalar s5(long a, long b) { return s5(q(a), q(b)); }

inline const ExactScalar& sqrt5_over_5() {
  static const ExactScalar v = s5(q(0), q(1, 5));
  return v;
}
inline const ExactScalar& phi_over_2() {  // (1 + sqrt5)/4
  static const ExactScalar v = s5(q(1, 4), q(1, 4));
  return v;
}

// Cross polytope: t(t + 1) and t + 1, any dimension.
inline Poly ex1_f() { return Poly{q(0), q(1), q(1)}; }
inline Poly ex1_g() { return Poly{q(1), q(1)}; }

// Icosahedron.
inline Poly ex2_f() {
  const ExactScalar a = sqrt5_over_5();
  return oracle::from_roots({{q(-1), 1}, {-a, 2}, {a, 1}});
}
inline Poly ex2_g() {
  return oracle::from_roots({{q(-1), 1}, {-sqrt5_over_5(), 1}});
}
/// Reference table; its P_1 entry disagrees with the factored form.
inline std::vector<ExactScalar> ex2_f_table() {
  return {s5(q(10, 75), q(2, 75)), s5(q(40, 25), q(8, 25)), s5(q(46, 105), q(14, 105)), s5(q(10, 25), q(2, 25)),
          q(8, 35)};
}
inline ExactScalar ex2_f_c1_corrected() { return s5(q(10, 25), q(2, 25)); }
inline std::vector<ExactScalar> ex2_g_table() { return {s5(q(5, 15), q(3, 15)), s5(q(1), q(1, 5)), q(2, 3)}; }

// 600-cell.
inline Poly ex3_f() {
  const ExactScalar half = q(1, 2);
  const ExactScalar r3 = s5(q(-1, 4), q(1, 4));  // (sqrt5 - 1)/4, squares to (3 - sqrt5)/8
  const ExactScalar p2 = phi_over_2();
  Poly f = oracle::from_roots({{q(-1), 2}, {q(0), 2}, {half, 2}, {-half, 2}, {r3, 2}, {-r3, 2}, {-p2, 2}, {p2, 1}},
                              q(330825728L));
  const Poly quad{s5(q(15649, 20192), q(3121, 20192)), -s5(q(9023, 5048), q(682, 5048)), q(1)};
  return f * quad;
}
inline Poly ex3_g() {
  const ExactScalar half = q(1, 2);
  const ExactScalar r3 = s5(q(-1, 4), q(1, 4));
  return oracle::from_roots({{q(-1), 2}, {q(0), 2}, {-half, 2}, {r3, 2}, {-r3, 2}, {-phi_over_2(), 2}, {half, 1}},
                            q(330825728L));
}
inline std::vector<ExactScalar> ex3_f_table() {
  const std::vector<std::pair<long, long>> t{{36360, 27840},   {154460, 104980}, {304377, 222546}, {509144, 346840},
                                             {650135, 457330}, {735888, 518520}, {693868, 515214}, {561568, 445440},
                                             {355338, 335124}, {155020, 211700}, {34342, 103356},  {-54120, 38280},
                                             {0, 0},           {0, 0},           {67485, -870},    {74208, 4640},
                                             {39695, 9860},    {45432, 0}};
  std::vector<ExactScalar> out;
  for (auto [a, b] : t) out.push_back(s5(a, b));
  return out;
}
inline std::vector<ExactScalar> ex3_g_table() {
  const std::vector<std::pair<long, long>> t{
      {32064896, 14094016},   {115619392, 50762688},  {218376480, 95770656},  {302799232, 132540288},
      {341648640, 149016960}, {327231552, 141868992}, {270956448, 116326112}, {195135488, 82383360},
      {121939488, 49975200},  {65422080, 25441920},   {29540896, 10439264},   {10903680, 3149952},
      {3149952, 524992},      {565376, 0}};
  std::vector<ExactScalar> out;
  for (auto [a, b] : t) out.push_back(s5(a, b));
  return out;
}

}  // namespace worked
