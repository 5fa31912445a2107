#include <algorithm>
#include <regex>

#include "einstab/errors.hpp"
#include "einstab/killing.hpp"
#include "einstab/surd.hpp"
#include "internal.hpp"

namespace einstab::spaces {

using Kind = SymSpaceId::Kind;

namespace {

struct FixedRow {
  const char* name;
  Kind kind;
  int m, dim_k;
  const char* display;
};

constexpr FixedRow kFixed[] = {
    {"e6-sp4", Kind::E6Sp4, 42, 36, "E6/Sp(4)"},
    {"e6-f4", Kind::E6F4, 26, 52, "E6/F4"},
    {"e7-su8", Kind::E7Su8, 70, 63, "E7/SU(8)"},
    {"e8-spin16", Kind::E8Spin16, 128, 120, "E8/Spin(16)"},
    {"f4-spin9", Kind::F4Spin9, 16, 36, "F4/Spin(9)"},
};

struct ParamRow {
  const char* name;
  Kind kind;
  int min_n;
};

constexpr ParamRow kParam[] = {
    {"sphere", Kind::Sphere, 2},      {"grassmann", Kind::SoGrassmann, 3},
    {"sp-grassmann", Kind::SpGrassmann, 2}, {"su-so", Kind::SuSo, 3},
    {"su-sp", Kind::SuSp, 3},
};

std::string label_ii(int i, int part) {
  std::string s = "(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")";
  if (part == 1) s += "a";
  if (part == 2) s += "b";
  return s;
}

std::string label_ij(int i, int j) {
  if (i > j) std::swap(i, j);
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

int SymSpaceId::m() const {
  switch (kind) {
    case Kind::SoGrassmann: return n * n;
    case Kind::SpGrassmann: return 4 * n * n;
    case Kind::Sphere: return n;
    case Kind::SuSo: return (n - 1) * (n + 2) / 2;
    case Kind::SuSp: return (n - 1) * (2 * n + 1);
    case Kind::Adjoint: return criteria::casimir_row(alg).dim_g;
    default:
      for (const auto& f : kFixed)
        if (f.kind == kind) return f.m;
  }
  return 0;
}

int SymSpaceId::dim_k() const {
  switch (kind) {
    case Kind::SoGrassmann: return n * (n - 1);
    case Kind::SpGrassmann: return 2 * n * (2 * n + 1);
    case Kind::Sphere: return n * (n - 1) / 2;
    case Kind::SuSo: return n * (n - 1) / 2;
    case Kind::SuSp: return n * (2 * n + 1);
    case Kind::Adjoint: return m();
    default:
      for (const auto& f : kFixed)
        if (f.kind == kind) return f.dim_k;
  }
  return 0;
}

int SymSpaceId::d_ii() const { return m() * (m() - 1) / 2 - dim_k(); }

std::string SymSpaceId::text() const {
  if (kind == Kind::Adjoint) return "adjoint(" + alg + ")";
  for (const auto& f : kFixed)
    if (f.kind == kind) return f.name;
  for (const auto& p : kParam)
    if (p.kind == kind) return std::string(p.name) + "(" + std::to_string(n) + ")";
  return "?";
}

std::string SymSpaceId::display() const {
  auto N = [](int v) { return std::to_string(v); };
  switch (kind) {
    case Kind::SoGrassmann: return "SO(" + N(2 * n) + ")/SO(" + N(n) + ")xSO(" + N(n) + ")";
    case Kind::SpGrassmann: return "Sp(" + N(2 * n) + ")/Sp(" + N(n) + ")xSp(" + N(n) + ")";
    case Kind::Sphere: return "SO(" + N(n + 1) + ")/SO(" + N(n) + ")";
    case Kind::SuSo: return "SU(" + N(n) + ")/SO(" + N(n) + ")";
    case Kind::SuSp: return "SU(" + N(2 * n) + ")/Sp(" + N(n) + ")";
    case Kind::Adjoint: return "(HxH)/H, h=" + alg;
    default:
      for (const auto& f : kFixed)
        if (f.kind == kind) return f.display;
  }
  return "?";
}

SymSpaceId SymSpaceId::parse(const std::string& s) {
  SymSpaceId id;
  for (const auto& f : kFixed) {
    if (s == f.name) {
      id.kind = f.kind;
      return id;
    }
  }
  static const std::regex adj(R"(adjoint\(([a-z0-9()]+)\))");
  std::smatch mt;
  if (std::regex_match(s, mt, adj)) {
    id.kind = Kind::Adjoint;
    id.alg = mt[1];
    int dim = 0;
    try {
      dim = criteria::casimir_row(id.alg).dim_g;
    } catch (const Error& e) {
      throw InvalidParameters("adjoint factor: unknown simple algebra '" + id.alg + "'");
    }
    detail::require(dim > 3, "adjoint factor needs dim h > 3");
    return id;
  }
  static const std::regex par(R"(([a-z-]+)\(([0-9]+)\))");
  if (std::regex_match(s, mt, par)) {
    for (const auto& p : kParam) {
      if (mt[1] != p.name) continue;
      id.kind = p.kind;
      id.n = std::stoi(mt[2]);
      detail::require(id.n >= p.min_n, std::string(p.name) + " needs n >= " + std::to_string(p.min_n));
      if (p.kind == Kind::SuSo)
        detail::require(id.n != 4, "su-so(4) is the Grassmannian grassmann(3); use that factor");
      return id;
    }
  }
  throw ParseError("unknown symmetric-space factor '" + s + "'");
}

std::vector<SymSpaceId> som_order(std::vector<SymSpaceId> ids) {
  auto rank = [](const SymSpaceId& x) { return x.grassmannian() ? 0 : (x.sphere() ? 1 : 2); };
  std::stable_sort(ids.begin(), ids.end(),
                   [&](const SymSpaceId& a, const SymSpaceId& b) { return rank(a) < rank(b); });
  return ids;
}

namespace {

struct SomLayout {
  std::vector<SymSpaceId> f;
  int m = 0;
  // summand index per (i, part) for (ii), and per (i, j) for (ij)
  std::vector<std::vector<int>> ii;
  std::vector<std::vector<int>> ij;
};

SomLayout layout(const std::vector<SymSpaceId>& ids, lich::SummandSet* out) {
  SomLayout L;
  L.f = ids;
  int l = static_cast<int>(ids.size());
  for (const auto& x : ids) L.m += x.m();
  std::vector<std::string> labels;
  std::vector<int> dims;
  L.ii.assign(l, {});
  L.ij.assign(l, std::vector<int>(l, -1));
  for (int i = 0; i < l; ++i) {
    const auto& x = ids[i];
    if (x.sphere()) continue;
    if (x.grassmannian()) {
      for (int part = 1; part <= 2; ++part) {
        L.ii[i].push_back(static_cast<int>(labels.size()));
        labels.push_back(label_ii(i, part));
        dims.push_back(x.d_ii() / 2);
      }
    } else {
      L.ii[i].push_back(static_cast<int>(labels.size()));
      labels.push_back(label_ii(i, 0));
      dims.push_back(x.d_ii());
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      L.ij[i][j] = L.ij[j][i] = static_cast<int>(labels.size());
      labels.push_back(label_ij(i, j));
      dims.push_back(ids[i].m() * ids[j].m());
    }
  }
  if (out) *out = lich::SummandSet(labels, dims, true);
  return L;
}

}  // namespace

SpaceModel build_som(const std::vector<SymSpaceId>& input) {
  int l = static_cast<int>(input.size());
  if (l < 2) throw InvalidParameters("som construction needs l >= 2 factors");
  bool has_g = false, has_s = false;
  for (const auto& x : input) {
    has_g = has_g || x.grassmannian();
    has_s = has_s || x.sphere();
  }
  if (has_g && has_s) throw IncompatibleFactors("Grassmannian factors and spheres cannot be combined");
  Rational kappa = input.front().kappa();
  for (const auto& x : input) {
    if (x.kappa() != kappa)
      throw NotEinstein("dim k_i/m_i differs: " + input.front().text() + " has " + kappa.str() + ", " + x.text() +
                        " has " + x.kappa().str());
  }

  SpaceModel M;
  M.spec.family = Family::Som;
  M.spec.factors = som_order(input);
  const auto& f = M.spec.factors;
  SomLayout L = layout(f, &M.summands);
  if (M.summands.size() < 2)
    throw InvalidParameters("som: r = " + std::to_string(M.summands.size()) + " summand; the space is isotropy irreducible");
  int m = L.m;
  Rational m2(m - 2);

  M.algebra = "so(" + std::to_string(m) + ")";
  M.dim_g = m * (m - 1) / 2;
  for (const auto& x : f) M.dim_k += x.dim_k();
  std::string disp = "SO(" + std::to_string(m) + ")/";
  for (int i = 0; i < l; ++i) disp += (i ? " + " : "") + f[i].display();
  M.display = disp;

  const auto& labels = M.summands.labels;
  auto put = [&](int a, int b, int c, const Rational& v) {
    if (!v.is_zero()) M.constants.set(labels[a], labels[b], labels[c], v);
  };

  for (int i = 0; i < l; ++i) {
    const auto& x = f[i];
    int mi = x.m();
    Rational d(x.d_ii());
    if (x.kind == Kind::SoGrassmann) {
      auto g = detail::so_grassmann_square(x.n);
      Rational s = Rational(mi - 2) / m2;
      int a = L.ii[i][0], b = L.ii[i][1];
      put(a, a, a, s * g.c111);
      put(b, b, b, s * g.c111);
      put(a, a, b, s * g.c112);
      put(a, b, b, s * g.c112);
    } else if (x.kind == Kind::SpGrassmann) {
      M.parametric = true;
    } else if (!x.sphere()) {
      int a = L.ii[i][0];
      put(a, a, a, d / m2 * (Rational(mi - 2) - 4 * x.kappa()));
    }
    for (int j = 0; j < l; ++j) {
      if (j == i || x.sphere()) continue;
      int e = L.ij[i][j];
      Rational v = Rational(f[j].m()) * d / m2;
      if (x.grassmannian()) {
        put(e, e, L.ii[i][0], v / 2);
        put(e, e, L.ii[i][1], v / 2);
      } else {
        put(e, e, L.ii[i][0], v);
      }
    }
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int k = j + 1; k < l; ++k)
        put(L.ij[i][j], L.ij[i][k], L.ij[j][k],
            Rational(f[i].m()) * Rational(f[j].m()) * Rational(f[k].m()) / (2 * m2));

  M.rho = Rational(1, 4) + kappa / m2;

  const auto& reg = killing::Registry::global();
  for (const auto& x : f) {
    Rational c;
    int pieces = 1;
    std::string how;
    switch (x.kind) {
      case Kind::Sphere:
        c = reg.ratio("so(m)", "so(N)", "standard", {{"m", x.n}, {"N", m}}).c;
        how = "registry so(k) in so(m)";
        break;
      case Kind::SoGrassmann:
        c = reg.ratio("so(n)", "so(n^2)", "tensor", {{"n", x.n}}).c *
            reg.ratio("so(m)", "so(N)", "standard", {{"m", x.m()}, {"N", m}}).c;
        pieces = 2;
        how = "registry so(n) in so(n^2) in so(m)";
        break;
      case Kind::SpGrassmann:
        c = reg.ratio("sp(n)", "so(4n^2)", "tensor", {{"n", x.n}}).c *
            reg.ratio("so(m)", "so(N)", "standard", {{"m", x.m()}, {"N", m}}).c;
        pieces = 2;
        how = "registry sp(n) in so(4n^2) in so(m)";
        break;
      case Kind::Adjoint:
        c = Rational(1, x.m() - 2) * reg.ratio("so(m)", "so(N)", "standard", {{"m", x.m()}, {"N", m}}).c;
        how = "adjoint representation, Kil_h is the trace form of so(dim h)";
        break;
      default:
        c = (2 * x.kappa() - 1) / m2;
        how = "derived: symmetric pair Einstein constant 1/2 gives c = (2 kappa - 1)/(m-2)";
    }
    for (int p = 0; p < pieces; ++p) M.killing.push_back({c, x.dim_k() / pieces, x.text() + ": " + how});
  }

  CasimirData cas;
  cas.per_summand.assign(M.summands.size(), 2 * kappa / m2);
  cas.source = "isotropy Casimir of SO(m)/K: 2 dim k_i/(m_i (m-2))";
  M.casimir = cas;

  if (M.parametric) {
    M.has_constants = false;
    M.notes.push_back("Sp-Grassmannian factor: [111], [112] of Sp(2n)/Sp(n)xSp(n) are unknown; matrix not formed");
  } else {
    detail::check_einstein(M);
  }
  return M;
}

bool som_eigenvector_check(const SpaceModel& model) {
  if (model.spec.family != Family::Som) throw InvalidParameters("not a som model");
  if (model.parametric) throw ParametricConstants("Grassmannian [111], [112] unknown");
  const auto& f = model.spec.factors;
  int l = static_cast<int>(f.size());
  SomLayout L = layout(f, nullptr);
  int m = L.m;
  auto S = lich::assemble_lich_matrix(model.summands, model.constants);
  std::size_t r = model.summands.size();
  using exact::SurdSum;

  auto check = [&](const std::vector<SurdSum>& v, const Rational& lambda) {
    std::vector<SurdSum> w(r);
    bool any = false;
    for (std::size_t k = 0; k < r; ++k) {
      w[k] = v[k] * SurdSum::sqrt(Rational(1, model.summands.dims[k]));
      any = any || !w[k].is_zero();
    }
    if (!any) return true;
    for (std::size_t k = 0; k < r; ++k) {
      SurdSum acc;
      for (std::size_t q = 0; q < r; ++q) acc += S(k, q) * w[q];
      if (acc != lambda * w[k]) return false;
    }
    return true;
  };
  auto sq = [](const Rational& x) { return SurdSum::sqrt(x); };

  Rational lam_a(m, 2 * (m - 2));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      Rational mi(f[i].m()), mj(f[j].m()), di(f[i].d_ii()), dj(f[j].d_ii());
      std::vector<SurdSum> a(r), b(r);
      auto fill_ii = [&](int t, const Rational& ca, const Rational& d_self, const Rational& d_other, bool neg) {
        std::size_t parts = L.ii[t].size();
        for (int idx : L.ii[t]) {
          Rational dd = parts == 2 ? d_self / 2 : d_self;
          Rational db = parts == 2 ? d_other / 2 : d_other;
          a[idx] = (neg ? -ca : ca) * sq(dd);
          b[idx] = sq(db);
        }
      };
      fill_ii(i, mj, di, dj, false);
      fill_ii(j, mi, dj, di, true);
      int e = L.ij[i][j];
      a[e] = (mj - mi) / 2 * sq(mi * mj);
      b[e] = Rational(-2) * sq(di * dj) * sq(Rational(1) / (mi * mj));
      for (int h = 0; h < l; ++h) {
        if (h == i || h == j) continue;
        Rational mh(f[h].m());
        a[L.ij[i][h]] = mj / 2 * sq(mi * mh);
        a[L.ij[j][h]] = -mi / 2 * sq(mj * mh);
      }
      if (!check(a, lam_a)) return false;
      // B vanishes unless both factors carry an (ii) summand
      if (f[i].sphere() || f[j].sphere()) continue;
      Rational lam_b = (Rational(m - 1) - 2 * f[i].kappa()) / Rational(m - 2);
      if (!check(b, lam_b)) return false;
    }
  }
  return true;
}

}  // namespace einstab::spaces
