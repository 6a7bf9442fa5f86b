// A guided tour of the library on the quintic threefold in P^4: the classical
// Calabi-Yau testbed where every number below can be checked against the
// mirror-symmetry literature.

#include <iostream>

#include "qwc/qwc.hpp"

using namespace qwc;

int main() {
  CompleteIntersection X = parse_target("4:5");
  std::cout << "Target: degree-5 hypersurface in P^4 (" << X.str() << ")\n";
  std::cout << "  dimension " << X.dim() << ", index " << X.index()
            << ", chi = " << euler_characteristic(X).str()
            << ", c2.H = " << second_chern_h_pairing(X).str() << "\n\n";

  // The correcting classes mu_d measure how far the epsilon = 0+ chamber sits
  // from the Gromov-Witten chamber.  For the quintic only z^0 and z^1 parts
  // survive, and mu_1 is the famous 770H + 120z.
  MuClass m1 = mu(X, 1);
  std::cout << "mu_1:  H-part " << m1.value.coeff(0).coeff(1).str()
            << ",  z-part " << m1.value.coeff(1).coeff(0).str() << "\n";

  // Small J-series of the 0+ chamber.  J0 is the hypergeometric series
  // sum (5d)!/(d!)^5 q^d; J1/H starts 770q.
  SmallJ sj = small_j(X, Stability::zero_plus(), 6);
  std::cout << "J0   = ";
  for (int d = 0; d <= 3; ++d) std::cout << sj.j0.coeff(d).str() << " q^" << d << (d < 3 ? " + " : " + ...\n");
  std::cout << "J1/H = ";
  for (int d = 1; d <= 3; ++d) std::cout << sj.j1_h.coeff(d).str() << " q^" << d << (d < 3 ? " + " : " + ...\n");

  // Mirror map Q(q) = q exp((J1/H)/J0).
  RatSeries Q = mirror_map(X, 6);
  std::cout << "Q(q) = q";
  for (int d = 2; d <= 4; ++d) std::cout << " + " << Q.coeff(d).str() << " q^" << d;
  std::cout << " + ...\n\n";

  // Genus-0 oracle: Yukawa coupling in the mirror coordinate, three-point
  // values, and integer instanton numbers.
  YukawaData y = genus0_oracle(X, 6);
  std::cout << "Instanton numbers n_d:\n";
  for (size_t i = 0; i < y.instanton.size(); ++i)
    std::cout << "  n_" << (i + 1) << " = " << y.instanton[i].str() << "\n";
  std::cout << "\n";

  // Wall-crossing with an identically-zero Gromov-Witten table isolates the
  // transform's own contribution in the 0+ chamber.
  for (int g : {1, 2}) {
    InvariantTable zero(X, g, Stability::infinity(), {Rat(0), Rat(0), Rat(0)});
    InvariantTable qp = quasimap_from_gw(zero, Stability::zero_plus());
    std::cout << "zero GW table, genus " << g << ", 0+ chamber:";
    for (int d = 1; d <= 3; ++d) std::cout << "  " << qp.value(d).str();
    std::cout << "\n";
  }
  std::cout << "\n";

  // Degree-0 constant-map contributions from the Bernoulli formula.
  BracketCalculus calc(X);
  for (int g : {2, 3, 4})
    std::cout << "<>_{" << g << ",0,0} = " << calc.constant_map_value(g).str() << "\n";
  std::cout << "\n";

  // The identity suites that gate every release.
  CheckReport sp = semipositive_identity_check(X, 2, Stability::zero_plus(), 3);
  InvariantTable t(X, 2, Stability::infinity(), {Rat(1, 2), Rat(-3, 7), Rat(5)});
  CheckReport bc = bcov_identity_check(t, 3);
  std::cout << "semipositive identity (g=2, depth 3): " << (sp.pass ? "ok" : "FAILED") << "\n";
  std::cout << "mirror restatement   (g=2, depth 3): " << (bc.pass ? "ok" : "FAILED") << "\n";
  return sp.pass && bc.pass ? 0 : 1;
}
