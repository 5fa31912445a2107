#include "einstab/criteria.hpp"

#include <regex>

#include "einstab/errors.hpp"

namespace einstab::criteria {

namespace {

CasimirRow su_row(int n) {
  if (n == 2) return {"su(2)", 3, Rational(3), std::nullopt, std::nullopt};
  return {"su(" + std::to_string(n) + ")", n * n - 1, Rational(1), Rational(2 * (n - 1), n),
          Rational(2 * (n + 1), n)};
}

CasimirRow so_row(int n) {
  if (n == 7) return {"so(7)", 21, Rational(6, 5), Rational(7, 5), Rational(12, 5)};
  return {"so(" + std::to_string(n) + ")", n * (n - 1) / 2, Rational(n, n - 2), Rational(2 * (n - 4), n - 2),
          Rational(2 * (n - 1), n - 2)};
}

CasimirRow sp_row(int n) {
  return {"sp(" + std::to_string(n) + ")", n * (2 * n + 1), Rational(n, n + 1), Rational(2 * n + 1, n + 1),
          Rational(2 * n + 4, n + 1)};
}

}  // namespace

CasimirRow casimir_row(const std::string& algebra) {
  if (algebra == "e6") return {"e6", 78, Rational(3, 2), std::nullopt, Rational(13, 6)};
  if (algebra == "e7") return {"e7", 133, Rational(14, 9), std::nullopt, Rational(19, 9)};
  if (algebra == "e8") return {"e8", 248, Rational(8, 5), std::nullopt, Rational(31, 15)};
  if (algebra == "f4") return {"f4", 52, Rational(13, 9), std::nullopt, Rational(20, 9)};
  if (algebra == "g2") return {"g2", 14, Rational(7, 6), std::nullopt, Rational(5, 2)};

  static const std::regex pat(R"(^(su|so|sp)\((\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(algebra, m, pat)) throw UnsupportedType("unknown algebra '" + algebra + "'");
  int n = std::stoi(m[2]);
  std::string fam = m[1];
  if (fam == "su") {
    if (n < 2) throw OutOfRange("su(n) needs n >= 2");
    return su_row(n);
  }
  if (fam == "sp") {
    if (n < 1) throw OutOfRange("sp(n) needs n >= 1");
    return n == 1 ? su_row(2) : sp_row(n);
  }
  switch (n) {
    case 3: return su_row(2);
    case 5: return sp_row(2);
    case 6: return su_row(4);
    case 7: return so_row(7);
    default:
      if (n >= 8) return so_row(n);
      throw OutOfRange("so(" + std::to_string(n) + ") is not simple");
  }
}

std::string part_name(Part p) {
  switch (p) {
    case Part::None: return "none";
    case Part::Sc2_i: return "sc2-i";
    case Part::Sc2_ii: return "sc2-ii";
    case Part::Sc2_iii: return "sc2-iii";
    case Part::Sc2_iv: return "sc2-iv";
    case Part::Sc1_i: return "sc1-i";
    case Part::Sc1_ii: return "sc1-ii";
    case Part::Sc1_iii: return "sc1-iii";
    case Part::Sc1_iv: return "sc1-iv";
  }
  return "?";
}

Part part_from_name(const std::string& s) {
  for (Part p : {Part::None, Part::Sc2_i, Part::Sc2_ii, Part::Sc2_iii, Part::Sc2_iv, Part::Sc1_i, Part::Sc1_ii,
                 Part::Sc1_iii, Part::Sc1_iv})
    if (part_name(p) == s) return p;
  throw ParseError("unknown criterion part '" + s + "'");
}

namespace {

const char* kStable = "G-stable";
const char* kSemistable = "2rho <= lambda_p (G-semistable)";
const char* kLocalMin = "G-unstable-local-min";
const char* kMaxBelow = "lambda_p_max <= 2rho";

void fire(CriterionResult& r, Part p, const char* conclusion) {
  r.applied = p;
  r.conclusion = conclusion;
}

}  // namespace

std::pair<Rational, Rational> structural_thresholds(const CasimirRow& row) {
  Rational dim(row.dim_g), lt = row.lambda_tau, lmax = row.effective_max();
  return {dim * (lt - Rational(1)) / (Rational(2) * lmax), dim * (lmax - Rational(1)) / (Rational(2) * lt)};
}

CriterionResult criterion_structural(int dim_g, int dim_k, const CasimirRow& row) {
  if (dim_g != row.dim_g) throw InvalidParameters("dim g does not match the Casimir row of " + row.algebra);
  CriterionResult r;
  r.thresholds = structural_thresholds(row);
  Rational k(dim_k);
  if (k < r.thresholds.first)
    fire(r, Part::Sc2_i, kStable);
  else if (k == r.thresholds.first)
    fire(r, Part::Sc2_ii, kSemistable);
  else if (k > r.thresholds.second)
    fire(r, Part::Sc2_iii, kLocalMin);
  else if (k == r.thresholds.second)
    fire(r, Part::Sc2_iv, kMaxBelow);
  return r;
}

CriterionResult criterion_einstein(const Rational& rho, const CasimirRow& row) {
  CriterionResult r;
  Rational e = Rational(8) * rho - Rational(1);
  Rational lt = row.lambda_tau, lmax = row.effective_max();
  r.thresholds = {lt, lmax};
  Rational two_rho = Rational(2) * rho, half(1, 2);
  r.bound_interval = std::make_pair(half * (lt - e) + two_rho, half * (lmax - e) + two_rho);
  if (e < lt)
    fire(r, Part::Sc1_i, kStable);
  else if (e == lt)
    fire(r, Part::Sc1_ii, kSemistable);
  else if (lmax < e)
    fire(r, Part::Sc1_iii, kLocalMin);
  else if (lmax == e)
    fire(r, Part::Sc1_iv, kMaxBelow);
  return r;
}

lich::StabilityVerdict group_killing_verdict(const CasimirRow& row) {
  lich::StabilityVerdict v;
  Rational half(1, 2);
  v.two_rho = half;
  Rational lp = row.lambda_tau * half;
  Rational lmax = row.effective_max() * half;
  v.lambda_p = {lp, lp};
  v.lambda_p_max = {lmax, lmax};
  // multiplicities of the Casimir eigenspaces are not tabulated; count distinct eigenvalues
  std::vector<Rational> eig{row.lambda_tau * half};
  if (row.lambda_tau_mid) eig.push_back(*row.lambda_tau_mid * half);
  if (row.lambda_tau_max) eig.push_back(*row.lambda_tau_max * half);
  for (const auto& x : eig) {
    if (x < half) ++v.coindex;
    if (x == half) ++v.nullity;
  }
  v.g_nondegenerate = v.nullity == 0;
  if (lp < half)
    v.kind = lmax < half ? lich::Kind::UnstableLocalMin : lich::Kind::UnstableSaddle;
  else if (lp == half)
    v.kind = lich::Kind::NeutrallyStable;
  else
    v.kind = lich::Kind::Stable;
  v.conclusive = true;
  v.implied.insert("counts-are-distinct-eigenvalues");
  if (v.kind == lich::Kind::Stable) v.implied.insert("local-max-of-scal");
  v.implied.insert(v.g_nondegenerate ? "G-rigid" : "G-degenerate");
  return v;
}

std::string table_mark(const CriterionResult& r, lich::Kind table_kind) {
  switch (r.applied) {
    case Part::None: return "No";
    case Part::Sc2_i:
    case Part::Sc2_iii:
    case Part::Sc1_i:
    case Part::Sc1_iii: return "✓";
    case Part::Sc2_ii:
    case Part::Sc1_ii: return table_kind == lich::Kind::SemistableBoundary ? "✓" : "✓*";
    case Part::Sc2_iv:
    case Part::Sc1_iv: return "✓*";
  }
  return "No";
}

}  // namespace einstab::criteria
