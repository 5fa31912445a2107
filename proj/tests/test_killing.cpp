#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "einstab/errors.hpp"
#include "einstab/killing.hpp"
#include "util.hpp"

using namespace einstab;
using namespace einstab::killing;

TEST_CASE("expression evaluator") {
  CHECK(evaluate("3n-1", {{"n", 2}}) == R("5"));
  CHECK(evaluate("(n-2)/(2*n)", {{"n", 9}}) == R("7/18"));
  CHECK(evaluate("1/q^2", {{"q", 3}}) == R("1/9"));
  CHECK(evaluate("-2 + 3*4", {}) == R("10"));
  CHECK(evaluate("2(n+1)", {{"n", 3}}) == R("8"));
  CHECK(evaluate("pq", {{"p", 2}, {"q", 5}}) == R("10"));
  CHECK_THROWS_AS(evaluate("n+", {{"n", 1}}), ParseError);
  CHECK_THROWS_AS(evaluate("x", {}), ParseError);
  CHECK_THROWS_AS(evaluate("1/(n-1)", {{"n", 1}}), ParseError);
  CHECK_THROWS_AS(evaluate("(1", {}), ParseError);
}

TEST_CASE("name instantiation") {
  CHECK(instantiate("sp(3n-1)", {{"n", 2}}) == "sp(5)");
  CHECK(instantiate("so(n^2)", {{"n", 3}}) == "so(9)");
  CHECK(instantiate("e8", {}) == "e8");
  CHECK(instantiate("so(26)", {}) == "so(26)");
}

TEST_CASE("registry records carry provenance") {
  const auto& reg = Registry::global();
  CHECK(reg.records().size() > 40);
  for (const auto& r : reg.records()) {
    CHECK_FALSE(r.provenance.empty());
    CHECK_FALSE(r.tag.empty());
  }
}

TEST_CASE("registry lookups") {
  const auto& reg = Registry::global();
  auto so12 = reg.ratio("so(12)", "e7", "maximal");
  CHECK(so12.c == R("5/9"));
  auto sp = reg.ratio("sp(n)", "sp(3n-1)", "standard", {{"n", 2}});
  CHECK(sp.c == R("1/2"));
  CHECK(sp.ambient == "sp(5)");
  CHECK(sp.subalgebra == "sp(2)");
  CHECK(reg.ratio("su(p)", "su(pq)", "tensor", {{"p", 2}, {"q", 3}}).c == R("1/9"));
  CHECK(reg.ratio("so(n)", "so(3n+2)", "standard", {{"n", 4}}).c == R("1/6"));
  CHECK_THROWS_AS(reg.ratio("so(12)", "e7", "nonsense"), UnknownLabel);
}

TEST_CASE("composition") {
  const auto& reg = Registry::global();
  EmbeddingChain chain{reg.ratio("e7", "e8", "maximal"), reg.ratio("so(12)", "e7", "maximal")};
  CHECK(compose_ratio(chain) == R("1/3"));
  CHECK(compose_ratio(chain) == reg.ratio("so(12)", "e8", "e7").c);
  EmbeddingChain so9{reg.ratio("su(9)", "e8", "maximal"), reg.ratio("so(n)", "su(n)", "standard", {{"n", 9}})};
  CHECK(compose_ratio(so9) == R("7/60"));
  CHECK(compose_ratio({reg.ratio("su(5)", "e8", "su5su5")}) == R("1/6"));
  EmbeddingChain broken{reg.ratio("so(12)", "e7", "maximal"), reg.ratio("e7", "e8", "maximal")};
  CHECK_THROWS_AS(compose_ratio(broken), NonComposable);
  CHECK_THROWS_AS(compose_ratio({}), NonComposable);
}

TEST_CASE("quoted chain products agree with their links") {
  const auto& reg = Registry::global();
  CHECK(reg.ratio("so(3)", "e8", "4su3").c == reg.ratio("su(3)", "e8", "4su3").c * R("1/6"));
  CHECK(reg.ratio("so(4)", "e8", "4so4").c ==
        reg.ratio("so(4)", "so(12)", "3so4").c * reg.ratio("so(12)", "e8", "e7").c);
  CHECK(reg.ratio("so(5)", "e8", "so5so5").c ==
        reg.ratio("so(5)", "so(16)", "so5so5").c * reg.ratio("so(16)", "e8", "maximal").c);
  CHECK(reg.ratio("su(3)", "e8", "su3su3").c ==
        reg.ratio("su(3)", "su(9)", "su3su3").c * reg.ratio("su(9)", "e8", "maximal").c);
  CHECK(reg.ratio("so(8)", "e8", "so16").c ==
        reg.ratio("so(m)", "so(N)", "standard", {{"m", 8}, {"N", 16}}).c * reg.ratio("so(16)", "e8", "maximal").c);
}

TEST_CASE("einstein constant") {
  CHECK(einstein_constant(240, {{R("0"), 8}}) == R("4/15"));
  CHECK(einstein_constant(212, {{R("7/60"), 36}}) == R("13/40"));
  CHECK(einstein_constant(252, {{R("1/60"), 3}, {R("1/4"), 55}, {R("1/6"), 15}}) == R("29/80"));
  CHECK_THROWS_AS(einstein_constant(10, {{R("0"), 100}}), OutOfBracket);
  CHECK_THROWS_AS(einstein_constant(0, {}), InvalidParameters);
}

TEST_CASE("symmetric pairs give rho = 1/2") {
  // c = (2 dim k - d)/(2 dim k) for an irreducible symmetric pair
  struct Pair {
    int dim_k, d;
  };
  for (Pair p : {Pair{28, 8}, Pair{52, 26}, Pair{120, 128}, Pair{36, 16}}) {
    exact::Rational c = exact::Rational(2 * p.dim_k - p.d, 2 * p.dim_k);
    CHECK(einstein_constant(p.d, {{c, p.dim_k}}) == R("1/2"));
  }
}

TEST_CASE("rho from Casimir constant") {
  CHECK(rho_from_casimir(R("0")) == R("1/4"));
  CHECK(rho_from_casimir(R("1/6")) == R("1/3"));
  // SO(m)/K with a = 2 dim k_i/(m_i (m-2)): three SO(3) in SO(9)
  CHECK(rho_from_casimir(R("2") * R("3") / (R("3") * R("7"))) == R("1/4") + R("1/7"));
}

TEST_CASE("registry parsing and override") {
  CHECK_THROWS_AS(Registry::parse("nope\n", "t"), RegistryError);
  CHECK_THROWS_AS(Registry::parse("einstab-killing-ratios v1\na | b | c\n", "t"), RegistryError);
  CHECK_THROWS_AS(Registry::parse("", "t"), RegistryError);
  auto r = Registry::parse("einstab-killing-ratios v1\n# c\nsu(2) | su(n) | x | 2/n | quoted\n", "t");
  CHECK(r.ratio("su(2)", "su(n)", "x", {{"n", 4}}).c == R("1/2"));
  CHECK_THROWS_AS(r.ratio("su(2)", "su(n)", "x", {{"n", 1}}), OutOfRange);
}
