#include <algorithm>
#include <map>

#include <omp.h>

#include "einstab/criteria.hpp"
#include "einstab/errors.hpp"
#include "einstab/expected.hpp"

namespace einstab::spaces {

using lich::Kind;
using Status = FieldCheck::Status;

TableId parse_table_id(const std::string& s) {
  static const std::map<std::string, TableId> m = {
      {"IA", TableId::IA}, {"IAA", TableId::IAA}, {"IB1", TableId::IB1}, {"IB2", TableId::IB2}, {"IB3", TableId::IB3}};
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  auto it = m.find(u);
  if (it == m.end()) throw ParseError("unknown table '" + s + "' (IA, IAA, IB1, IB2, IB3)");
  return it->second;
}

std::string table_name(TableId t) {
  switch (t) {
    case TableId::IA: return "IA";
    case TableId::IAA: return "IAA";
    case TableId::IB1: return "IB1";
    case TableId::IB2: return "IB2";
    case TableId::IB3: return "IB3";
  }
  return "?";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Erratum: return "erratum";
    case Status::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

Rational Q(long a, long b = 1) { return Rational(a, b); }
ExpectedValue V(Rational v, std::optional<int> mult = std::nullopt) { return {std::move(v), mult}; }

const std::vector<Kind> kUnstable = {Kind::UnstableSaddle, Kind::UnstableLocalMin};

ExpectedInstance inst(std::string spec, std::string params = "") {
  ExpectedInstance e;
  e.spec = std::move(spec);
  e.params = std::move(params);
  return e;
}

std::string np(const char* k, long v) { return std::string(k) + "=" + std::to_string(v); }

// ---- rows shared by IA and IAA: one list of instances, verdict fields or value fields filled per table

struct Builder {
  bool verdict;  // IA
  std::vector<ExpectedRow> rows;

  ExpectedRow& row(std::string number, std::string space, std::string verdict_text) {
    ExpectedRow r;
    r.table = verdict ? TableId::IA : TableId::IAA;
    r.number = std::move(number);
    r.space = std::move(space);
    r.verdict_text = std::move(verdict_text);
    rows.push_back(std::move(r));
    return rows.back();
  }
};

std::string sc1_7a(long n) {
  if (n == 1) return "No";
  if (n == 2) return "✓*";
  return "✓";
}

std::vector<ExpectedRow> table_ia(bool verdict) {
  Builder b{verdict, {}};

  {
    auto& r = b.row("1a.1", "su(3)/s(3u(1))", "G-unst., loc.min.");
    auto e = inst("flag:su(3)");
    if (verdict) e.kinds = {Kind::UnstableLocalMin};
    else e.rho = Q(5, 12), e.lambda_p = V(Q(1, 2)), e.c1 = e.c2 = "No";
    r.instances.push_back(e);
  }
  {
    auto& r = b.row("1a.2", "su(4)/s(4u(1))", "G-unst. coindex 3, G-deg. nullity 2");
    auto e = inst("flag:su(4)");
    if (verdict) e.kinds = kUnstable, e.coindex = 3, e.nullity = 2;
    else e.rho = Q(3, 8), e.lambda_p = V(Q(1, 2)), e.lambda_max = V(Q(3, 4)), e.c1 = e.c2 = "No";
    r.instances.push_back(e);
  }
  {
    auto& r = b.row("1a.3", "su(n)/s(nu(1)), n>=5", "G-unst. coindex n-1, saddle");
    for (long n = 5; n <= 9; ++n) {
      auto e = inst("flag:su(" + std::to_string(n) + ")", np("n", n));
      if (verdict) e.kinds = {Kind::UnstableSaddle}, e.coindex = static_cast<int>(n - 1);
      else e.rho = Q(n + 2, 4 * n), e.lambda_p = V(Q(1, 2)), e.lambda_max = V(Q(n - 1, n)), e.c1 = e.c2 = "No";
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("1b.1", "so(6)/3so(2)", "G-unst. coindex 3, G-deg. nullity 2, saddle");
    auto e = inst("flag:so(6)");
    if (verdict) e.kinds = {Kind::UnstableSaddle}, e.coindex = 3, e.nullity = 2;
    else e.rho = Q(3, 8), e.lambda_p = V(Q(1, 2)), e.lambda_max = V(Q(3, 4)), e.c1 = e.c2 = "No";
    r.instances.push_back(e);
  }
  {
    auto& r = b.row("1b.2", "so(2n)/nso(2), n>=4", "G-neut.stab. nullity n-1, saddle");
    for (long n = 4; n <= 8; ++n) {
      auto e = inst("flag:so(" + std::to_string(2 * n) + ")", np("n", n));
      if (verdict) {
        e.kinds = {Kind::NeutrallyStable};
        e.nullity = static_cast<int>(n - 1);
        if (n == 4)
          e.errata.push_back({"nullity", "9",
                              "at n = 4 the eigenvalues n/(2(n-1)) and (n-2)/(n-1) coincide with 2 rho = 2/3, "
                              "so the kernel has dimension 6 + 3"});
        e.notes.push_back("saddle is not decided by the G-invariant spectrum");
      } else {
        e.rho = Q(n, 4 * (n - 1));
        e.lambda_p = V(Q(n, 2 * (n - 1)));
        e.lambda_mid = V(Q(n - 2, n - 1));
        e.lambda_max = V(Q(1));
        e.c1 = e.c2 = "No";
      }
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("2a", "su(nk)/s(nu(k)), k>=2, n>=3", "G-unst.");
    for (long n = 3; n <= 5; ++n)
      for (long k = 2; k <= 4; ++k) {
        auto e = inst("", np("n", n) + "," + np("k", k));
        e.algebra = "su(" + std::to_string(n * k) + ")";
        e.dim_g = static_cast<int>(n * k * n * k - 1);
        e.dim_k = static_cast<int>(n * k * k - 1);
        e.rho = Q(n + 2, 4 * n);
        e.kinds = kUnstable;
        if (!verdict) {
          e.c1 = e.c2 = "No";
          if (n == 3) e.errata.push_back({"c1", k == 2 ? "✓*" : "✓", "the criterion on rho applies at n = 3"});
        }
        r.instances.push_back(e);
      }
  }
  {
    auto& r = b.row("2b", "sp(nk)/nsp(k), k>=1, n>=3", "G-unst.");
    for (long n = 3; n <= 5; ++n)
      for (long k = 1; k <= 4; ++k) {
        auto e = inst("", np("n", n) + "," + np("k", k));
        e.algebra = "sp(" + std::to_string(n * k) + ")";
        e.dim_g = static_cast<int>(n * k * (2 * n * k + 1));
        e.dim_k = static_cast<int>(n * k * (2 * k + 1));
        e.rho = Q((n + 2) * k + 2, 4 * (n * k + 1));
        e.kinds = kUnstable;
        if (!verdict) {
          e.c1 = e.c2 = "No";
          if (n == 3) e.errata.push_back({"c1", k == 1 ? "✓*" : "✓", "the criterion on rho applies at n = 3"});
        }
        r.instances.push_back(e);
      }
  }
  {
    auto& r = b.row("2c", "so(nk)/nso(k), k>=3, n>=3", "G-unst.");
    for (long n = 3; n <= 5; ++n)
      for (long k = 3; k <= 6; ++k) {
        auto e = inst("som:sphere(" + std::to_string(k) + ")x" + std::to_string(n), np("n", n) + "," + np("k", k));
        if (verdict) {
          e.kinds = kUnstable;
        } else {
          e.rho = Q((n + 2) * k - 4, 4 * (n * k - 2));
          e.lambda_p = V(Q(n * k, 2 * (n * k - 2)));
          if (n > 3) e.lambda_max = V(Q((n - 1) * k, n * k - 2));
          else e.notes.push_back("n = 3: the eigenvalue (n-1)k/(nk-2) has multiplicity 0");
          e.c1 = e.c2 = "No";
          if (n == 3 && k >= 4) e.errata.push_back({"c1", k == 4 ? "✓*" : "✓", "the criterion on rho applies at n = 3"});
        }
        r.instances.push_back(e);
      }
  }
  {
    auto& r = b.row("3a", "so(n^2)/so(n)+so(n), n>=3", "G-stab., glob.max.");
    for (long n = 3; n <= 6; ++n) {
      auto e = inst("grassmann-square:n=" + std::to_string(n), np("n", n));
      if (verdict) e.kinds = {Kind::Stable}, e.role = "global-max";
      else e.rho = Q(n * n * n + 2 * n - 4, 4 * n * (n * n - 2)), e.lambda_p = V(Q(n * n - 4, n * n - 2)), e.c1 = e.c2 = "No";
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("3b", "so(4n^2)/sp(n)+sp(n), n>=2", "");
    for (long n = 2; n <= 4; ++n) {
      auto e = inst("grassmann-square-sp:n=" + std::to_string(n), np("n", n));
      if (verdict) e.open_case = true;
      else e.rho = Q(2 * n * n * n + n + 1, 4 * n * (2 * n * n - 1)), e.c1 = e.c2 = "No";
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("4", "so(n)/k, n = dim k", "G-unst. coindex l-1, saddle");
    struct C {
      const char* spec;
      long m, l;
    };
    for (auto c : {C{"som:adjoint(su(3))x2", 16, 2}, C{"som:adjoint(su(3))+adjoint(g2)", 22, 2},
                   C{"som:adjoint(su(3))x3", 24, 3}, C{"som:adjoint(su(3))x4", 32, 4}}) {
      auto e = inst(c.spec, np("m", c.m) + "," + np("l", c.l));
      if (verdict) {
        e.kinds = {Kind::UnstableSaddle};
        e.coindex = static_cast<int>(c.l - 1);
      } else {
        e.rho = Q(c.m + 2, 4 * (c.m - 2));
        e.lambda_p = V(Q(c.m, 2 * (c.m - 2)));
        e.lambda_max = V(Q(1));
        e.errata.push_back({"lambda_max", Q(c.m - 3, c.m - 2).str(), "the largest eigenvalue is (m-3)/(m-2) < 1"});
        e.c1 = e.c2 = "No";
      }
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("5", "so(m)/k1+...+kl, l>=2", "G-unst.");
    struct C {
      const char* spec;
      long m, mi, dki;
      bool spectrum;
    };
    for (auto c : {C{"som:e6-sp4+su-so(12)", 119, 42, 36, true}, C{"som:sphere(4)+su-sp(3)", 18, 4, 6, false},
                   C{"som:sphere(5)+e6-f4", 31, 5, 10, false}, C{"som:grassmann(3)x2", 18, 9, 6, false}}) {
      auto e = inst(c.spec, np("m", c.m));
      if (verdict) {
        e.kinds = kUnstable;
      } else {
        e.rho = Q(1, 4) + Q(c.dki, c.mi * (c.m - 2));
        if (c.spectrum) {
          e.lambda_p = V(Q(c.m, 2 * (c.m - 2)));
          e.lambda_max = V(Q(c.mi * (c.m - 1) - c.dki, c.mi * (c.m - 2)));
          e.errata.push_back({"lambda_max", Q(c.mi * (c.m - 1) - 2 * c.dki, c.mi * (c.m - 2)).str(),
                              "the eigenvector B has eigenvalue (m-1-2 dim k_i/m_i)/(m-2)"});
        } else {
          e.notes.push_back("spectrum printed only for l1 = l2 = 0");
        }
        e.c1 = e.c2 = "No";
      }
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("6", "su(pq+l)/su(p)+su(q)+u(l), pql = p^2+q^2+1", "G-unst., loc.min.");
    for (auto [p, q] : {std::pair<long, long>{2, 5}, {5, 13}}) {
      auto e = inst("su-triple:p=" + std::to_string(p) + ",q=" + std::to_string(q), np("p", p) + "," + np("q", q));
      long pq = p * p * q * q;
      if (verdict) {
        e.kinds = {Kind::UnstableLocalMin};
      } else {
        e.rho = Q(pq + 3 * p * p + 3 * q * q + 1, 4 * (pq + p * p + q * q + 1));
        e.lambda_p = V(Q(pq + p * p + q * q + 3, 2 * (pq + p * p + q * q + 1)));
        e.c1 = e.c2 = "No";
      }
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("7a", "sp(3n-1)/sp(n)+u(2n-1), n>=1", "G-unst., loc.min.");
    for (long n = 1; n <= 4; ++n) {
      auto e = inst("sp-chain:n=" + std::to_string(n), np("n", n));
      if (verdict) e.kinds = {Kind::UnstableLocalMin};
      else e.rho = Q(5, 12), e.lambda_p = V(Q(1, 2)), e.c1 = sc1_7a(n), e.c2 = "No";
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("7b", "so(3n+2)/so(n)+u(n+1), n>=3", "G-unst., loc.min.");
    for (long n = 3; n <= 6; ++n) {
      auto e = inst("so-chain:n=" + std::to_string(n), np("n", n));
      if (verdict) e.kinds = {Kind::UnstableLocalMin};
      else e.rho = Q(5, 12), e.lambda_p = V(Q(1, 2)), e.c1 = "✓", e.c2 = "No";
      r.instances.push_back(e);
    }
  }
  {
    auto& r = b.row("8", "so(26)/sp(1)+sp(5)+so(6)", "G-unst., loc.min.");
    auto e = inst("so26");
    if (verdict) e.kinds = {Kind::UnstableLocalMin};
    else e.rho = Q(29, 80), e.lambda_p = V(Q(21, 40)), e.c1 = e.c2 = "No";
    r.instances.push_back(e);
  }
  {
    auto& r = b.row("9", "so(8)/g2", "G-unst., loc.min.");
    auto e = inst("so8-g2");
    if (verdict) e.kinds = {Kind::UnstableLocalMin};
    else e.rho = Q(5, 12), e.c1 = e.c2 = "✓*";
    r.instances.push_back(e);
  }
  return b.rows;
}

struct IBRow {
  const char* number;
  const char* space;
  const char* spec;
  int r;
  std::optional<Rational> rho;
  std::optional<ExpectedValue> lp, lmax;
  Kind kind;
  const char* verdict_text;
  const char* c1;
  const char* c2;
};

ExpectedRow ib_row(TableId t, const IBRow& x) {
  ExpectedRow row;
  row.table = t;
  row.number = x.number;
  row.space = x.space;
  row.verdict_text = x.verdict_text;
  auto e = inst(x.spec);
  e.rho = x.rho;
  e.lambda_p = x.lp;
  e.lambda_max = x.lmax;
  e.kinds = {x.kind};
  e.c1 = x.c1;
  e.c2 = x.c2;
  row.instances.push_back(e);
  return row;
}

// caption: lambda_p is the only nonzero eigenvalue, multiplicity r - 1
ExpectedValue only(Rational v, int r) { return V(std::move(v), r - 1); }

std::vector<ExpectedRow> table_ib1() {
  std::vector<ExpectedRow> out;
  out.push_back(ib_row(TableId::IB1, {"1", "f4/spin(8)", "gws:f4-spin8", 3, Q(4, 9), only(Q(1, 3), 3),
                                       only(Q(1, 3), 3), Kind::UnstableLocalMin, "G-unst., loc.min.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB1, {"2", "e6/so(3)+so(3)+so(3)", "e6-so3x3", 5, Q(5, 16), std::nullopt, std::nullopt,
                                       Kind::SemistableBoundary, "G-semistab.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB1, {"3", "e6/spin(8)+R^2", "gws:e6-spin8", 3, Q(5, 12), only(Q(1, 2), 3),
                                       only(Q(1, 2), 3), Kind::UnstableLocalMin, "G-unst., loc.min.", "✓", "No"}));
  out.push_back(ib_row(TableId::IB1, {"4", "e6/su(2)+so(6)", "e6-su2-so6", 2, Q(3, 8), only(Q(3, 4), 2),
                                       only(Q(3, 4), 2), Kind::NeutrallyStable, "G-neut.stab., saddle", "No", "No"}));
  out.push_back(ib_row(TableId::IB1, {"5", "e7/so(8)", "gws:e7-so8", 3, Q(13, 36), only(Q(5, 6), 3), only(Q(5, 6), 3),
                                       Kind::Stable, "G-stab., loc.max.", "No", "No"}));
  out.push_back(ib_row(TableId::IB1, {"6", "e7/spin(8)+3su(2)", "gws:e7-spin8-3su2", 3, Q(7, 18), only(Q(2, 3), 3),
                                       only(Q(2, 3), 3), Kind::UnstableLocalMin, "G-unst., loc.min.", "No", "No"}));
  out.back().instances[0].errata.push_back(
      {"c1", "✓*", "rho = 7/18 lies in the range where the criterion on rho gives a G-unstable local minimum"});
  return out;
}

std::vector<ExpectedRow> table_ib2() {
  std::vector<ExpectedRow> out;
  out.push_back(ib_row(TableId::IB2, {"7", "e7/7su(2)", "e7-su2x7", 7, Q(1, 3), only(Q(7, 9), 7), only(Q(7, 9), 7),
                                       Kind::Stable, "G-stab., loc.max.", "No", "No"}));
  out.push_back(ib_row(TableId::IB2, {"8", "e8/so(5)", "e8-so5", 2, std::nullopt, std::nullopt, std::nullopt,
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB2, {"9", "e8/so(9)", "e8-so9", 3, Q(13, 40), std::nullopt, std::nullopt,
                                       Kind::SemistableBoundary, "G-semistab.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB2, {"10", "e8/spin(9)", "e8-spin9", 2, Q(13, 40), only(Q(53, 60), 2),
                                       only(Q(53, 60), 2), Kind::Stable, "G-stab., loc.max.", "✓*", "✓*"}));
  out.push_back(ib_row(TableId::IB2, {"11", "e8/su(5)+su(5)", "e8-su5su5", 2, Q(7, 20), only(Q(4, 5), 2),
                                       only(Q(4, 5), 2), Kind::Stable, "G-stab., glob.max.", "No", "No"}));
  out.back().instances[0].role = "global-max";
  out.push_back(ib_row(TableId::IB2, {"12", "e8/4su(3)", "e8-su3x4", 4, Q(19, 60), only(Q(4, 5), 4), only(Q(4, 5), 4),
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB2, {"13", "e8/4so(3)", "e8-so3x4", 9, Q(11, 40), std::nullopt, std::nullopt,
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB2, {"14", "e8/spin(8)+spin(8)", "gws:e8-spin8x2", 3, Q(11, 30), only(Q(4, 5), 3),
                                       only(Q(4, 5), 3), Kind::Stable, "G-stab., loc.max.", "No", "No"}));
  return out;
}

std::vector<ExpectedRow> table_ib3() {
  std::vector<ExpectedRow> out;
  out.push_back(ib_row(TableId::IB3, {"15", "e8/8su(2)", "e8-su2x8", 14, Q(3, 10), V(Q(4, 5), 7), V(Q(14, 15), 6),
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB3, {"16", "e8/so(5)+so(5)", "e8-so5x2", 6, Q(7, 24), std::nullopt, std::nullopt,
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB3, {"17", "e8/su(3)+su(3)", "e8-su3x2", 5, Q(17, 60), std::nullopt, std::nullopt,
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB3, {"18a", "e6/t", "flag:e6", 36, Q(7, 24), V(Q(3, 4), 20), V(Q(1), 15),
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB3, {"18b", "e7/t", "flag:e7", 63, Q(5, 18), V(Q(7, 9), 27), V(Q(1), 35),
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  out.push_back(ib_row(TableId::IB3, {"18c", "e8/t", "flag:e8", 120, Q(4, 15), V(Q(4, 5), 35), V(Q(1), 84),
                                       Kind::Stable, "G-stab., loc.max.", "✓", "✓"}));
  return out;
}

// ---- comparison

struct Checker {
  const ExpectedInstance& inst;
  std::vector<FieldCheck> out;

  void check(const std::string& field, const std::string& printed, const std::string& computed, std::string note = "") {
    FieldCheck c{field, printed, computed, Status::Match, std::move(note)};
    if (printed != computed) {
      c.status = Status::Mismatch;
      for (const auto& e : inst.errata)
        if (e.field == field && e.corrected == computed) {
          c.status = Status::Erratum;
          c.note = e.note;
        }
    }
    out.push_back(std::move(c));
  }
};

std::string kinds_text(const std::vector<Kind>& ks) {
  std::string s;
  for (const auto& k : ks) s += (s.empty() ? "" : " | ") + lich::kind_name(k);
  return s;
}

void check_eigen(Checker& ch, const std::string& field, const ExpectedValue& want,
                 const std::optional<std::pair<Rational, int>>& got) {
  ch.check(field, want.value.str(), got ? got->first.str() : "none");
  if (want.mult) ch.check(field + ".mult", std::to_string(*want.mult), got ? std::to_string(got->second) : "0");
}

void compare_regression(Checker& ch, const ExpectedInstance& inst) {
  auto row = criteria::casimir_row(inst.algebra);
  Kind k = inst.kinds.empty() ? Kind::UnstableSaddle : inst.kinds.front();
  if (!inst.c1.empty()) ch.check("c1", inst.c1, criteria::table_mark(criteria::criterion_einstein(*inst.rho, row), k));
  if (!inst.c2.empty())
    ch.check("c2", inst.c2, criteria::table_mark(criteria::criterion_structural(inst.dim_g, inst.dim_k, row), k));
}

}  // namespace

std::vector<ExpectedRow> expected_table(TableId t) {
  switch (t) {
    case TableId::IA: return table_ia(true);
    case TableId::IAA: return table_ia(false);
    case TableId::IB1: return table_ib1();
    case TableId::IB2: return table_ib2();
    case TableId::IB3: return table_ib3();
  }
  return {};
}

std::vector<FieldCheck> compare(const ExpectedInstance& inst, const Report* report) {
  Checker ch{inst, {}};
  if (inst.spec.empty()) {
    compare_regression(ch, inst);
    return ch.out;
  }
  if (!report) throw InvalidCase("no report for '" + inst.spec + "'");
  const Report& R = *report;

  if (inst.rho) ch.check("rho", inst.rho->str(), R.model.rho.str());

  if (inst.lambda_p || inst.lambda_mid || inst.lambda_max) {
    std::vector<std::pair<Rational, int>> ev;
    if (R.verdict)
      for (const auto& p : R.verdict->tt_rational.pairs)
        if (!p.first.is_zero()) ev.push_back(p);
    std::optional<std::pair<Rational, int>> lo, hi, mid;
    if (!ev.empty()) lo = ev.front(), hi = ev.back();
    if (inst.lambda_p) check_eigen(ch, "lambda_p", *inst.lambda_p, lo);
    if (inst.lambda_max) check_eigen(ch, "lambda_max", *inst.lambda_max, hi);
    if (inst.lambda_mid) {
      if (ev.size() == 3) {
        mid = ev[1];
      } else if (ev.size() == 2) {
        // a middle eigenvalue equal to one of the extremes merges with it
        for (const auto& p : ev)
          if (p.first == inst.lambda_mid->value) mid = p;
      }
      check_eigen(ch, "lambda_mid", *inst.lambda_mid, mid);
    }
  }

  auto kind = R.kind();
  if (inst.open_case) {
    ch.check("kind", "open", kind ? lich::kind_name(*kind) : "open");
  } else if (!inst.kinds.empty()) {
    std::string got = kind ? lich::kind_name(*kind) : "undecided";
    bool any = kind && std::find(inst.kinds.begin(), inst.kinds.end(), *kind) != inst.kinds.end();
    ch.check("kind", kinds_text(inst.kinds), any ? kinds_text(inst.kinds) : got);
  }
  if (inst.coindex) {
    std::string got = R.verdict ? std::to_string(R.verdict->coindex)
                                : (R.coindex_at_least ? ">= " + std::to_string(*R.coindex_at_least) : "unknown");
    ch.check("coindex", std::to_string(*inst.coindex), got);
  }
  if (inst.nullity)
    ch.check("nullity", std::to_string(*inst.nullity), R.verdict ? std::to_string(R.verdict->nullity) : "unknown");
  if (!inst.role.empty()) ch.check("role", inst.role, R.two_summand ? role_name(R.two_summand->role) : "none");
  if (!inst.c1.empty()) ch.check("c1", inst.c1, R.c1_mark);
  if (!inst.c2.empty()) ch.check("c2", inst.c2, R.c2_mark);
  return ch.out;
}

bool InstanceResult::ok() const {
  if (!error.empty()) return false;
  return std::none_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.status == Status::Mismatch; });
}

bool InstanceResult::has_erratum() const {
  return std::any_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.status == Status::Erratum; });
}

std::vector<InstanceResult> run_table(TableId t) {
  auto rows = expected_table(t);
  std::vector<std::pair<const ExpectedRow*, const ExpectedInstance*>> work;
  for (const auto& r : rows)
    for (const auto& i : r.instances) work.emplace_back(&r, &i);

  std::vector<InstanceResult> out(work.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t w = 0; w < work.size(); ++w) {
    const auto& [row, in] = work[w];
    InstanceResult& res = out[w];
    res.row = row->number;
    res.space = row->space;
    res.instance = *in;
    try {
      if (!in->spec.empty()) res.report = analyze(in->spec);
      res.checks = compare(*in, res.report ? &*res.report : nullptr);
    } catch (const Error& e) {
      res.error = e.what();
    }
  }
  return out;
}

}  // namespace einstab::spaces
