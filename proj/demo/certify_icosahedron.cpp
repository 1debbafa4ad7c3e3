// Library walk-through: build the icosahedron, write down the two
// certificates as products of linear factors, and decide optimality.

#include "tammes/certificate.hpp"
#include "tammes/lp_search.hpp"

#include <cmath>
#include <iostream>

int main() {
  using namespace tammes;
  const Configuration ico = make_icosahedron();
  const ExactScalar t_c = ico.t_c();  // sqrt(5)/5
  const ExactScalar t2 = -t_c;

  // f = (t + 1)(t + t_C)^2 (t - t_C) vanishes on the whole Gram spectrum.
  const Poly f = Poly::linear_factor(ExactScalar(-1)) * Poly::linear_factor(t2) * Poly::linear_factor(t2) *
                 Poly::linear_factor(t_c);
  const Poly g = Poly::linear_factor(ExactScalar(-1)) * Poly::linear_factor(t2);

  const TheoremInput in{ico, Certificate::from_monomial(3, t_c, f), Certificate::from_monomial(3, t2, g), t2};
  const Verdict v = verify_theorem(in);

  std::cout << "f in the Gegenbauer basis:";
  for (const auto& c : in.f.expansion().coeffs) std::cout << "  " << c;
  std::cout << "\nf# = " << *v.cond_i.sharp << ", g# = " << *v.cond_iii.sharp << "\n";
  std::cout << (v.optimal ? "optimal" : "not optimal") << ", d = " << v.d << "\n";

  // The LP finds the same bound numerically.
  const LPResult lp = lp_bound(3, t_c.to_double(), 4);
  std::cout << "LP bound at degree 4: " << lp.bound << " (" << to_string(lp.status) << ")\n";
  return v.optimal ? 0 : 1;
}
