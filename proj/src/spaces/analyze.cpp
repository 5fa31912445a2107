#include <algorithm>

#include "einstab/errors.hpp"
#include "einstab/killing.hpp"
#include "einstab/spaces.hpp"

namespace einstab::spaces {

std::string role_name(TwoSummandRole r) {
  switch (r) {
    case TwoSummandRole::GlobalMax: return "global-max";
    case TwoSummandRole::DegenerateGlobalMax: return "degenerate-global-max";
    case TwoSummandRole::LocalMin: return "local-min";
  }
  return "?";
}

TwoSummandResult two_summand_analysis(int d1, const Rational& c111, const Rational& c112) {
  if (d1 < 1) throw InvalidCase("d1 must be positive");
  if (c112.sign() <= 0) throw InvalidCase("[112] = [122] must be positive (maximal K)");
  if (c111.sign() < 0) throw InvalidCase("[111] must be nonnegative");
  TwoSummandResult r;
  r.curve.a = Rational(d1, 2) - c111 / 4 - c112 / 2;
  r.curve.b = c112 / 4;
  if (!(r.curve.a > r.curve.b)) throw InvalidCase("a > b fails: a = " + r.curve.a.str() + ", b = " + r.curve.b.str());
  Rational nine_b = 9 * r.curve.b;
  if (r.curve.a < nine_b) {
    r.einstein_count = 1;
    r.role = TwoSummandRole::GlobalMax;
  } else if (r.curve.a == nine_b) {
    r.einstein_count = 1;
    r.role = TwoSummandRole::DegenerateGlobalMax;
  } else {
    r.einstein_count = 3;
    r.role = TwoSummandRole::LocalMin;
  }
  return r;
}

TwoSummandThreshold two_summand_threshold(int d1, const Rational& rho) {
  if (d1 < 1) throw InvalidCase("d1 must be positive");
  TwoSummandThreshold t;
  t.d1 = d1;
  t.rho = rho;
  t.threshold = Rational(d1) * rho / 2;
  t.upper = 2 * Rational(d1) * (1 - 2 * rho) / 3;
  t.statement = "with t = [112] in (0, " + t.upper.str() + "]: a = " + (Rational(d1) * rho).str() +
                " + t/4, b = t/4; a <= 9b <=> t >= " + t.threshold.str() +
                ": g_Kil is the unique invariant Einstein metric and a global maximum (degenerate iff t = " +
                t.threshold.str() + "); t < " + t.threshold.str() +
                ": g_Kil is a local minimum and two other invariant Einstein metrics exist";
  return t;
}

std::optional<lich::Kind> Report::kind() const {
  if (verdict) return verdict->kind;
  return bound_kind;
}

std::string criteria_mark(const std::optional<criteria::CriterionResult>& r, std::optional<lich::Kind> kind) {
  if (!r) return "";
  return criteria::table_mark(*r, kind.value_or(lich::Kind::Stable));
}

namespace {

std::optional<lich::Kind> kind_from_part(criteria::Part p) {
  using criteria::Part;
  switch (p) {
    case Part::Sc2_i:
    case Part::Sc1_i: return lich::Kind::Stable;
    case Part::Sc2_ii:
    case Part::Sc1_ii: return lich::Kind::SemistableBoundary;
    case Part::Sc2_iii:
    case Part::Sc1_iii: return lich::Kind::UnstableLocalMin;
    default: return std::nullopt;
  }
}

}  // namespace

Report analyze(const std::string& spec) { return analyze(parse_spec(spec)); }

Report analyze(const SpaceSpec& spec) {
  Report R;
  R.model = build(spec);
  const SpaceModel& M = R.model;

  if (spec.family == Family::GroupKilling) {
    auto row = criteria::casimir_row(M.algebra);
    R.verdict = criteria::group_killing_verdict(row);
    R.rho_routes.push_back({"bi-invariant", Rational(1, 4)});
    R.notes.push_back("lambda_tau = " + row.lambda_tau.str() + " against 2 rho = 1/2, scaled by the Casimir on sym_0(g)");
    return R;
  }

  if (!M.killing.empty()) {
    std::vector<std::pair<Rational, int>> v;
    for (const auto& c : M.killing) v.emplace_back(c.c, c.dim);
    R.rho_routes.push_back({"killing-ratios", killing::einstein_constant(M.dim_g - M.dim_k, v)});
  }
  if (M.has_constants) {
    auto ric = lich::ricci_eigenvalues(M.summands, M.constants);
    R.rho_routes.push_back({"structural-constants", ric.front()});
  }
  if (M.casimir) {
    const auto& a = M.casimir->per_summand;
    bool uniform = std::all_of(a.begin(), a.end(), [&](const Rational& x) { return x == a.front(); });
    if (uniform) {
      R.rho_routes.push_back({"casimir", killing::rho_from_casimir(a.front())});
    } else {
      R.rho_agree = false;
      R.notes.push_back("Casimir constant differs between summands: not Einstein");
    }
  }
  for (const auto& r : R.rho_routes)
    if (r.value != M.rho) R.rho_agree = false;

  if (M.has_constants) {
    auto S = lich::assemble_lich_matrix(M.summands, M.constants);
    auto full = exact::full_spectrum(S);
    if (full.irrational.empty()) R.spectrum = full.rational;
    R.verdict = lich::classify(M.rho, M.summands, full);
  }

  std::optional<criteria::CasimirRow> row;
  try {
    row = criteria::casimir_row(M.algebra);
  } catch (const Error&) {
    R.notes.push_back("no Casimir data for " + M.algebra + "; criteria skipped");
  }
  if (row) {
    R.c2 = criteria::criterion_structural(M.dim_g, M.dim_k, *row);
    R.c1 = criteria::criterion_einstein(M.rho, *row);
  }

  if (spec.family == Family::Som && M.parametric) {
    int l1 = 0, l2 = 0;
    for (const auto& f : M.spec.factors) {
      if (f.grassmannian()) ++l1;
      if (f.grassmannian() || f.sphere()) ++l2;
    }
    int l = static_cast<int>(M.spec.factors.size());
    int bound = l1 + (l - l2) - 1;
    R.coindex_at_least = bound;
    if (bound >= 1) R.bound_kind = lich::Kind::UnstableSaddle;
    R.notes.push_back("parametric constants: coindex >= " + std::to_string(bound) + " from the eigenvectors A^{ij}");
  }
  if (!R.verdict && !R.bound_kind && (R.c2 || R.c1)) {
    std::optional<lich::Kind> k;
    if (R.c2) k = kind_from_part(R.c2->applied);
    if (!k && R.c1) k = kind_from_part(R.c1->applied);
    if (k && spec.family == Family::CriteriaOnly) R.bound_kind = k;
  }
  R.c1_mark = criteria_mark(R.c1, R.kind());
  R.c2_mark = criteria_mark(R.c2, R.kind());

  if (M.summands.size() == 2 && M.summands.dims[0] == M.summands.dims[1]) {
    if (M.parametric) {
      R.threshold = two_summand_threshold(M.summands.dims[0], M.rho);
    } else if (M.has_constants) {
      const auto& sc = M.constants;
      Rational c112 = sc.get("1", "1", "2");
      if (c112.sign() > 0 && c112 == sc.get("1", "2", "2") && sc.get("1", "1", "1") == sc.get("2", "2", "2"))
        R.two_summand = two_summand_analysis(M.summands.dims[0], sc.get("1", "1", "1"), c112);
    }
  }
  return R;
}

}  // namespace einstab::spaces
