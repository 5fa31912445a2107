#pragma once

#include <vector>

#include "einstab/matrix.hpp"
#include "einstab/polynomial.hpp"

namespace einstab::exact {

// det(xI - m). Runs the multi-modular kernel.
Polynomial char_poly(const SymRationalMatrix& m);

// Same result through the serial Bareiss-and-interpolate reference.
Polynomial char_poly_reference(const SymRationalMatrix& m);

// Integer scaling m = M / scale with M integral and scale the lcm of denominators.
struct ScaledMatrix {
  IntMatrix M;
  mpz_class scale;
};
ScaledMatrix to_integer(const SymRationalMatrix& m);

namespace kernels {

// Integer characteristic polynomial coefficients, lowest degree first, monic.
// OpenMP-parallel over primes; Hessenberg reduction mod p, then CRT.
std::vector<mpz_class> charpoly_modular(const IntMatrix& M);
// Serial reference: Bareiss determinants of (xI - M) at x = 0..n, then Newton interpolation.
std::vector<mpz_class> charpoly_bareiss(const IntMatrix& M);

mpz_class bareiss_determinant(IntMatrix A);

}  // namespace kernels
}  // namespace einstab::exact
