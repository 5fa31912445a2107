#include <random>

#include "doctest.h"
#include "einstab/charpoly.hpp"
#include "util.hpp"

using namespace einstab::exact;

TEST_CASE("modular kernel agrees with Bareiss reference on random integer matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int n = 1; n <= 14; ++n) {
    IntMatrix A(n, std::vector<mpz_class>(n));
    for (auto& row : A)
      for (auto& v : row) v = entry(rng);
    CHECK(kernels::charpoly_modular(A) == kernels::charpoly_bareiss(A));
  }
}

TEST_CASE("large entries force several primes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-1000000000L, 1000000000L);
  IntMatrix A(8, std::vector<mpz_class>(8));
  for (auto& row : A)
    for (auto& v : row) v = entry(rng);
  CHECK(kernels::charpoly_modular(A) == kernels::charpoly_bareiss(A));
}

TEST_CASE("rational matrices: kernels agree after scaling") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  for (int n = 2; n <= 9; ++n) {
    SymRationalMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    CHECK(char_poly(m) == char_poly_reference(m));
  }
}

TEST_CASE("Bareiss determinant handles zero pivots") {
  IntMatrix A{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  CHECK(kernels::bareiss_determinant(A) == -2);
  IntMatrix Z{{0, 0}, {0, 5}};
  CHECK(kernels::bareiss_determinant(Z) == 0);
}
