#include "doctest.h"
#include "einstab/criteria.hpp"
#include "einstab/errors.hpp"
#include "util.hpp"

using namespace einstab;
using namespace einstab::criteria;
using lich::Kind;

TEST_CASE("casimir rows") {
  auto su5 = casimir_row("su(5)");
  CHECK(su5.dim_g == 24);
  CHECK(su5.lambda_tau == R("1"));
  CHECK(*su5.lambda_tau_mid == R("8/5"));
  CHECK(*su5.lambda_tau_max == R("12/5"));
  auto e8 = casimir_row("e8");
  CHECK(e8.dim_g == 248);
  CHECK(e8.lambda_tau == R("8/5"));
  CHECK_FALSE(e8.lambda_tau_mid.has_value());
  CHECK(*e8.lambda_tau_max == R("31/15"));
  auto g2 = casimir_row("g2");
  CHECK(g2.dim_g == 14);
  CHECK(g2.lambda_tau == R("7/6"));
  CHECK(*g2.lambda_tau_max == R("5/2"));
  auto su2 = casimir_row("su(2)");
  CHECK(su2.lambda_tau == R("3"));
  CHECK_FALSE(su2.lambda_tau_max.has_value());
  CHECK(su2.effective_max() == R("3"));
  CHECK(casimir_row("so(7)").lambda_tau == R("6/5"));
  CHECK(casimir_row("so(10)").lambda_tau == R("5/4"));
  CHECK(casimir_row("sp(3)").lambda_tau == R("3/4"));
}

TEST_CASE("low-rank aliases") {
  CHECK(casimir_row("so(3)").algebra == "su(2)");
  CHECK(casimir_row("so(5)").algebra == "sp(2)");
  CHECK(casimir_row("so(6)").algebra == "su(4)");
  CHECK(casimir_row("sp(1)").algebra == "su(2)");
  CHECK_THROWS_AS(casimir_row("so(4)"), OutOfRange);
  CHECK_THROWS_AS(casimir_row("su(1)"), OutOfRange);
  CHECK_THROWS_AS(casimir_row("h7"), UnsupportedType);
}

TEST_CASE("exceptional thresholds") {
  // recomputed from the row data: (dim g (lt-1)/(2 lmax), dim g (lmax-1)/(2 lt))
  CHECK(structural_thresholds(casimir_row("e6")) == std::make_pair(R("9"), R("91/3")));
  CHECK(structural_thresholds(casimir_row("e7")) == std::make_pair(R("35/2"), R("95/2")));
  CHECK(structural_thresholds(casimir_row("e8")) == std::make_pair(R("36"), R("248/3")));
  CHECK(structural_thresholds(casimir_row("f4")) == std::make_pair(R("26/5"), R("22")));
  CHECK(structural_thresholds(casimir_row("g2")) == std::make_pair(R("7/15"), R("9")));
  CHECK(structural_thresholds(casimir_row("so(8)")) == std::make_pair(R("2"), R("14")));
}

TEST_CASE("structural criterion") {
  auto e8 = casimir_row("e8");
  CHECK(criterion_structural(248, 8, e8).applied == Part::Sc2_i);
  CHECK(criterion_structural(248, 24, e8).applied == Part::Sc2_i);
  CHECK(criterion_structural(248, 36, e8).applied == Part::Sc2_ii);
  CHECK(criterion_structural(248, 50, e8).applied == Part::None);
  CHECK(criterion_structural(248, 120, e8).applied == Part::Sc2_iii);
  CHECK(criterion_structural(52, 28, casimir_row("f4")).applied == Part::Sc2_iii);
  CHECK(criterion_structural(28, 14, casimir_row("so(8)")).applied == Part::Sc2_iv);
  CHECK(criterion_structural(248, 8, e8).conclusion == "G-stable");
  CHECK(criterion_structural(248, 50, e8).conclusion.empty());
  CHECK_THROWS_AS(criterion_structural(133, 8, e8), InvalidParameters);
}

TEST_CASE("einstein criterion") {
  CHECK(criterion_einstein(R("5/12"), casimir_row("e6")).applied == Part::Sc1_iii);
  CHECK(criterion_einstein(R("5/12"), casimir_row("sp(5)")).applied == Part::Sc1_iv);
  for (int n = 3; n <= 12; ++n) {
    auto r = criterion_einstein(exact::Rational(n + 2, 4 * n), casimir_row("su(" + std::to_string(n) + ")"));
    CHECK(r.applied == Part::None);
    CHECK(r.conclusion.empty());
  }
  CHECK(criterion_einstein(R("4/15"), casimir_row("e8")).applied == Part::Sc1_i);
  auto spin9 = criterion_einstein(R("13/40"), casimir_row("e8"));
  CHECK(spin9.applied == Part::Sc1_ii);
  REQUIRE(spin9.bound_interval.has_value());
  CHECK(spin9.bound_interval->first == R("13/20"));
  CHECK(spin9.bound_interval->second == R("53/60"));
}

TEST_CASE("sc1 is necessary for sc2") {
  // E8/T^8: sc2-i and sc1-i both fire
  CHECK(criterion_einstein(R("4/15"), casimir_row("e8")).applied == Part::Sc1_i);
  // F4/Spin(8): sc2-iii, and rho = 4/9 gives 8rho-1 = 23/9 > 20/9
  CHECK(criterion_einstein(R("4/9"), casimir_row("f4")).applied == Part::Sc1_iii);
}

TEST_CASE("bi-invariant metric on the group") {
  for (int n = 3; n <= 6; ++n) {
    auto v = group_killing_verdict(casimir_row("su(" + std::to_string(n) + ")"));
    CHECK(v.kind == Kind::NeutrallyStable);
    CHECK(v.two_rho == R("1/2"));
  }
  for (int n = 2; n <= 5; ++n) CHECK(lich::is_unstable(group_killing_verdict(casimir_row("sp(" + std::to_string(n) + ")")).kind));
  auto e8 = group_killing_verdict(casimir_row("e8"));
  CHECK(e8.kind == Kind::Stable);
  CHECK(e8.lambda_p.lo == R("4/5"));
  CHECK(e8.implied.count("counts-are-distinct-eigenvalues") == 1);
  CHECK(group_killing_verdict(casimir_row("so(10)")).kind == Kind::Stable);
  CHECK(group_killing_verdict(casimir_row("su(2)")).kind == Kind::Stable);
}

TEST_CASE("table marks") {
  CriterionResult none;
  CHECK(table_mark(none, Kind::Stable) == "No");
  CriterionResult r;
  r.applied = Part::Sc2_i;
  CHECK(table_mark(r, Kind::Stable) == "✓");
  r.applied = Part::Sc2_ii;
  CHECK(table_mark(r, Kind::SemistableBoundary) == "✓");
  CHECK(table_mark(r, Kind::Stable) == "✓*");
  r.applied = Part::Sc1_iv;
  CHECK(table_mark(r, Kind::UnstableLocalMin) == "✓*");
  for (const char* p : {"none", "sc2-i", "sc2-ii", "sc2-iii", "sc2-iv", "sc1-i", "sc1-ii", "sc1-iii", "sc1-iv"})
    CHECK(part_name(part_from_name(p)) == p);
}
