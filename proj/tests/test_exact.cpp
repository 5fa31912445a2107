#include <cmath>

#include "doctest.h"
#include "einstab/charpoly.hpp"
#include "einstab/spectrum.hpp"
#include "util.hpp"

using namespace einstab::exact;

TEST_CASE("rational canonical form and parsing") {
  CHECK(R("6/8") == Rational(3, 4));
  CHECK(R("-6/-8").str() == "3/4");
  CHECK(R("4/-2").str() == "-2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK_THROWS_AS(R("1/0"), einstab::ParseError);
  CHECK_THROWS_AS(R("abc"), einstab::ParseError);
}

TEST_CASE("char_poly small cases") {
  CHECK(char_poly(M({{"5/3"}})) == Polynomial({R("-5/3"), 1}));
  CHECK(char_poly(M({{"0", "1"}, {"1", "0"}})) == Polynomial({-1, 0, 1}));
}

TEST_CASE("char_poly of the seven-summand matrix 7c/16 I - c/16 J at c = 16/9") {
  SymRationalMatrix m(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = (i == j ? R("7/9") : Rational(0)) - R("1/9");
  Polynomial expect = Polynomial::x_minus(0);
  for (int k = 0; k < 6; ++k) expect = expect * Polynomial::x_minus(R("7/9"));
  CHECK(char_poly(m) == expect);
  CHECK(char_poly_reference(m) == expect);
}

TEST_CASE("rational_spectrum examples") {
  CHECK(rational_spectrum(SymRationalMatrix(3)) == S({{"0", 3}}));

  // Johnson graph J(5,2,1): 2-subsets adjacent when they share one element
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  SymRationalMatrix j(subsets.size());
  for (std::size_t x = 0; x < subsets.size(); ++x)
    for (std::size_t y = 0; y < subsets.size(); ++y) {
      auto [a, b] = subsets[x];
      auto [c, d] = subsets[y];
      int common = (a == c) + (a == d) + (b == c) + (b == d);
      j(x, y) = common == 1 ? 1 : 0;
    }
  CHECK(rational_spectrum(j) == S({{"-2", 5}, {"1", 4}, {"6", 1}}));

  auto golden = M({{"0", "1"}, {"1", "1"}});
  try {
    rational_spectrum(golden);
    FAIL("expected NonRationalSpectrum");
  } catch (const NonRationalSpectrum& e) {
    CHECK(e.residual() == Polynomial({-1, -1, 1}));
    CHECK(e.partial().pairs.empty());
  }
}

TEST_CASE("spectrum invariants: roots annihilate char_poly, trace, block product") {
  auto a = M({{"1/2", "1/3", "0"}, {"1/3", "1/2", "0"}, {"0", "0", "-2/7"}});
  auto b = M({{"2", "1"}, {"1", "2"}});
  SymRationalMatrix blk(5);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) blk(i, k) = a(i, k);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) blk(3 + i, 3 + k) = b(i, k);
  CHECK(char_poly(blk) == char_poly(a) * char_poly(b));
  Spectrum s = rational_spectrum(blk);
  CHECK(s.total() == 5);
  CHECK(s.weighted_sum() == blk.trace());
  Polynomial p = char_poly(blk);
  for (const auto& [v, k] : s.pairs) CHECK(p.eval(v).is_zero());
}

TEST_CASE("wide-range eigenvalues take the isolation path") {
  auto m = M({{"10000000", "0", "0"}, {"0", "-30000001", "0"}, {"0", "0", "10000000"}});
  CHECK(rational_spectrum(m) == S({{"-30000001", 1}, {"10000000", 2}}));
}

TEST_CASE("isolate_real_eigenvalues") {
  auto ivs = isolate_real_eigenvalues(Polynomial({-2, 0, 1}), R("1/100"));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].lo.to_double() <= -std::sqrt(2.0));
  CHECK(ivs[0].hi.to_double() >= -std::sqrt(2.0));
  CHECK(ivs[1].lo.to_double() <= std::sqrt(2.0));
  CHECK(ivs[1].hi.to_double() >= std::sqrt(2.0));
  for (auto& iv : ivs) CHECK(iv.hi - iv.lo <= R("1/100"));

  auto one = isolate_real_eigenvalues(Polynomial::x_minus(R("3/4")), R("1/100"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo == R("3/4"));
  CHECK(one[0].hi == R("3/4"));

  auto g = isolate_real_eigenvalues(Polynomial({-1, -1, 1}), R("1/1000"));
  REQUIRE(g.size() == 2);
  double roots[2] = {(1 - std::sqrt(5.0)) / 2, (1 + std::sqrt(5.0)) / 2};
  for (int i = 0; i < 2; ++i) {
    CHECK(g[i].lo.to_double() <= roots[i]);
    CHECK(g[i].hi.to_double() >= roots[i]);
    CHECK(g[i].hi - g[i].lo <= R("1/1000"));
  }
}

TEST_CASE("full_spectrum mixes rational and isolated roots") {
  // block diag(golden, 1/2)
  auto m = M({{"0", "1", "0"}, {"1", "1", "0"}, {"0", "0", "1/2"}});
  FullSpectrum fs = full_spectrum(m);
  CHECK(fs.rational == S({{"1/2", 1}}));
  REQUIRE(fs.irrational.size() == 2);
  CHECK(fs.total() == 3);
  auto r = fs.irrational[1];
  CHECK(r.compare(R("8/5")) == 1);
  CHECK(r.compare(R("13/8")) == -1);
}

TEST_CASE("squarefree decomposition") {
  Polynomial p = Polynomial::x_minus(1) * Polynomial::x_minus(1) * Polynomial::x_minus(R("1/3"));
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == Polynomial::x_minus(R("1/3")));
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == Polynomial::x_minus(1));
}
