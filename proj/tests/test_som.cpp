#include "doctest.h"
#include "einstab/errors.hpp"
#include "einstab/lich.hpp"
#include "einstab/spaces.hpp"
#include "einstab/surd.hpp"
#include "util.hpp"

using namespace einstab;
using namespace einstab::spaces;
using exact::Rational;
using exact::SurdSum;
using lich::Kind;

namespace {

std::vector<SymSpaceId> ids(const std::string& s) { return parse_spec("som:" + s).factors; }

}  // namespace

TEST_CASE("surd sums") {
  CHECK(SurdSum::sqrt(R("8")) == SurdSum::sqrt(R("2")) * R("2"));
  CHECK(SurdSum::sqrt(R("2")) * SurdSum::sqrt(R("2")) == SurdSum(R("2")));
  CHECK(SurdSum::sqrt(R("3/4")) == SurdSum::sqrt(R("3")) * R("1/2"));
  CHECK(SurdSum::sqrt(R("6")) * SurdSum::sqrt(R("10")) == SurdSum::sqrt(R("15")) * R("2"));
  SurdSum x = SurdSum::sqrt(R("2")) + SurdSum(R("1"));
  CHECK_FALSE(x.is_zero());
  CHECK((x - x).is_zero());
  CHECK(x.to_double() == doctest::Approx(2.41421356237));
  CHECK(SurdSum::sqrt(R("0")).is_zero());
}

TEST_CASE("adjoint su(3) twice: the l = 2 case") {
  auto M = build_som(ids("adjoint(su(3))x2"));
  CHECK(M.dim_g == 120);
  CHECK(M.summands.dims == std::vector<int>{20, 20, 64});
  CHECK(M.rho == R("9/28"));
  auto S3 = lich::assemble_lich_matrix(M.summands, M.constants);
  // trace of the 3x3 matrix is 0 + 4/7 + lambda_max
  CHECK(S3(0, 0) == R("4/7"));
  CHECK(S3(1, 1) == R("4/7"));
  CHECK(S3(2, 2) == R("5/14"));
  CHECK(S3(0, 0) + S3(1, 1) + S3(2, 2) == R("3/2"));
  CHECK(exact::rational_spectrum(S3) == S({{"0", 1}, {"4/7", 1}, {"13/14", 1}}));
  CHECK(som_eigenvector_check(M));
  auto rep = analyze("som:adjoint(su(3))x2");
  CHECK(rep.verdict->kind == Kind::UnstableSaddle);
  CHECK(rep.verdict->coindex == 1);
}

TEST_CASE("structural constants of SO(9)/SO(3)^3") {
  auto M = build_som(ids("sphere(3)x3"));
  CHECK(M.summands.size() == 3);
  CHECK(M.summands.dims == std::vector<int>{9, 9, 9});
  // m_i m_j m_k / (2(m - 2)) with m = 9
  CHECK(M.constants.get("(1,2)", "(1,3)", "(2,3)") == R("27/14"));
  CHECK(M.rho == R("11/28"));
  auto rep = analyze("som:sphere(3)x3");
  CHECK(rep.verdict->lambda_p.lo == R("9/14"));
  CHECK(som_eigenvector_check(M));
}

TEST_CASE("spheres: SO(nk)/SO(k)^n spectrum") {
  for (long n = 3; n <= 5; ++n)
    for (long k = 2; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto rep = analyze("som:sphere(" + std::to_string(k) + ")x" + std::to_string(n));
      std::vector<std::pair<Rational, int>> want = {{Rational(0), 1}, {Rational(n * k, 2 * (n * k - 2)), int(n - 1)}};
      if (n > 3) want.emplace_back(Rational((n - 1) * k, n * k - 2), int(n * (n - 3) / 2));
      CHECK(*rep.spectrum == exact::make_spectrum(want));
      CHECK(rep.model.rho == Rational((n + 2) * k - 4, 4 * (n * k - 2)));
      CHECK(som_eigenvector_check(rep.model));
    }
}

TEST_CASE("spectrum shape for simple factors") {
  struct C {
    const char* spec;
    long l;
  };
  for (auto c : {C{"adjoint(su(3))x2", 2}, C{"adjoint(su(3))+adjoint(g2)", 2}, C{"adjoint(su(3))x3", 3},
                 C{"adjoint(su(3))x4", 4}, C{"adjoint(g2)x2+adjoint(su(3))", 3}, C{"e6-sp4+su-so(12)", 2},
                 C{"e7-su8+su-so(18)", 2}, C{"su-sp(3)+su-sp(3)+su-sp(3)", 3}}) {
    CAPTURE(c.spec);
    auto rep = analyze(std::string("som:") + c.spec);
    const auto& M = rep.model;
    int m = 0;
    for (const auto& f : M.spec.factors) m += f.m();
    Rational kappa = M.spec.factors.front().kappa();
    Rational lp(m, 2 * (m - 2));
    Rational lmax = (Rational(m - 1) - 2 * kappa) / (m - 2);
    CHECK(M.rho == R("1/4") + kappa / (m - 2));
    CHECK(*rep.spectrum == exact::make_spectrum({{Rational(0), 1}, {lp, int(c.l - 1)},
                                                  {lmax, int(c.l * (c.l - 1) / 2)}}));
    CHECK(som_eigenvector_check(M));
    CHECK(rep.verdict->coindex >= c.l - 1);
    CHECK(rep.verdict->kind == Kind::UnstableSaddle);
  }
}

TEST_CASE("coindex bound and saddle conclusion") {
  for (const char* s : {"grassmann(3)x2", "grassmann(3)x3", "grassmann(4)x2", "sphere(3)x3", "sphere(4)+su-sp(3)",
                        "sphere(5)+e6-f4", "sphere(3)x2+adjoint(su(3))", "adjoint(su(3))x3", "sphere(3)x4",
                        "sp-grassmann(2)x2"}) {
    CAPTURE(s);
    auto rep = analyze(std::string("som:") + s);
    const auto& f = rep.model.spec.factors;
    int l = static_cast<int>(f.size()), l1 = 0, l2 = 0;
    for (const auto& x : f) {
      l1 += x.grassmannian();
      l2 += x.grassmannian() || x.sphere();
    }
    int bound = l1 + (l - l2) - 1;
    if (rep.verdict) {
      CHECK(rep.verdict->coindex >= bound);
      if (l1 + (l - l2) >= 2) CHECK(rep.verdict->kind == Kind::UnstableSaddle);
      CHECK(lich::is_unstable(rep.verdict->kind));
      CHECK(som_eigenvector_check(rep.model));
    } else {
      CHECK(*rep.coindex_at_least == bound);
      CHECK(rep.bound_kind == Kind::UnstableSaddle);
      CHECK_THROWS_AS(som_eigenvector_check(rep.model), ParametricConstants);
    }
  }
}

TEST_CASE("summand count r = 2 l1 + l - l2 + l(l-1)/2") {
  struct C {
    const char* spec;
    int r;
  };
  for (auto c : {C{"grassmann(3)x2", 2 * 2 + 0 + 1}, C{"sphere(3)x3", 0 + 0 + 3}, C{"sphere(4)+su-sp(3)", 1 + 1},
                 C{"adjoint(su(3))x3", 3 + 3}, C{"sp-grassmann(2)x2", 4 + 1}}) {
    CAPTURE(c.spec);
    CHECK(build_som(ids(c.spec)).summands.size() == static_cast<std::size_t>(c.r));
  }
}

TEST_CASE("factor order and compatibility") {
  auto o = som_order(ids("adjoint(su(3))+sphere(3)+e6-f4"));
  CHECK(o.front().sphere());
  o = som_order(ids("su-so(5)+grassmann(3)"));
  CHECK(o.front().grassmannian());

  CHECK_THROWS_AS(build_som(ids("grassmann(3)+sphere(3)")), IncompatibleFactors);
  CHECK_THROWS_AS(build_som(ids("sphere(3)+sphere(4)")), NotEinstein);
  CHECK_THROWS_AS(build_som(ids("sphere(4)x2")), InvalidParameters);
  CHECK_THROWS_AS(build_som(ids("e6-f4")), InvalidParameters);
  CHECK_THROWS_AS(parse_spec("som:su-so(4)x2"), InvalidParameters);
  CHECK_THROWS_AS(parse_spec("som:adjoint(su(2))x2"), InvalidParameters);
  CHECK_THROWS_AS(parse_spec("som:sphere(1)x3"), InvalidParameters);
}
