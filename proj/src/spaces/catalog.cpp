#include <cctype>
#include <algorithm>
#include <set>

#include "einstab/errors.hpp"
#include "einstab/killing.hpp"
#include "einstab/rootsys.hpp"
#include "internal.hpp"

namespace einstab::spaces {

namespace detail {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

void check_einstein(const SpaceModel& m) {
  auto ric = lich::ricci_eigenvalues(m.summands, m.constants);
  for (std::size_t k = 0; k < ric.size(); ++k) {
    if (ric[k] != m.rho)
      throw EinsteinViolation(m.display + ": Ricci eigenvalue on " + m.summands.labels[k] + " is " + ric[k].str() +
                              ", expected " + m.rho.str());
  }
}

GrassmannSquare so_grassmann_square(int n) {
  GrassmannSquare g;
  g.d1 = n * (n - 1) * (n - 1) * (n + 2) / 4;
  Rational N(n), n2m2(n * n - 2);
  g.c112 = N * (N - 1) * (N - 1) * (N - 2) * (N + 2) * (N + 2) / (16 * n2m2);
  g.rho = Rational(1, 4) + (N - 1) / (N * n2m2);
  g.c111 = 2 * Rational(g.d1) * (1 - 2 * g.rho) - 3 * g.c112;
  return g;
}

Rational casimir_of(const std::vector<RepFactor>& factors) {
  Rational a;
  for (const auto& f : factors)
    a += f.c * Rational(f.dim_k * f.index, f.dim_rep * 2 * f.dual_coxeter);
  return a;
}

}  // namespace detail

using detail::RepFactor;
using detail::require;

namespace {

// Dynkin indices with the adjoint normalised to 2h
RepFactor su_fund(const Rational& c, int n) { return {c, n * n - 1, 1, n, n}; }
RepFactor su_wedge2(const Rational& c, int n) { return {c, n * n - 1, n - 2, n * (n - 1) / 2, n}; }
RepFactor su_sym2(const Rational& c, int n) { return {c, n * n - 1, n + 2, n * (n + 1) / 2, n}; }
RepFactor so_vector(const Rational& c, int n) { return {c, n * (n - 1) / 2, 2, n, n - 2}; }
RepFactor so_sym2_0(const Rational& c, int n) { return {c, n * (n - 1) / 2, 2 * (n + 2), (n - 1) * (n + 2) / 2, n - 2}; }
RepFactor so9_wedge3(const Rational& c) { return {c, 36, 42, 84, 7}; }
RepFactor so9_spin_vector(const Rational& c) { return {c, 36, 64, 128, 7}; }
RepFactor sp_fund(const Rational& c, int n) { return {c, n * (2 * n + 1), 1, 2 * n, n + 1}; }
RepFactor sp_wedge2_0(const Rational& c, int n) { return {c, n * (2 * n + 1), 2 * n - 2, n * (2 * n - 1) - 1, n + 1}; }
RepFactor g2_seven(const Rational& c) { return {c, 14, 2, 7, 4}; }
RepFactor adjoint_of(const Rational& c, int dim, int h) { return {c, dim, 2 * h, dim, h}; }

KillingComponent reg(const std::string& sub, const std::string& amb, const std::string& tag, int dim,
                     const killing::Params& p = {}) {
  auto r = killing::Registry::global().ratio(sub, amb, tag, p);
  return {r.c, dim, r.subalgebra + " in " + r.ambient + " [" + r.embedding_tag + "]: " + r.provenance};
}

KillingComponent chain(const std::vector<killing::KillingRatio>& links, int dim) {
  std::string label;
  for (const auto& l : links) label += (label.empty() ? "" : " <- ") + l.subalgebra + " in " + l.ambient;
  return {killing::compose_ratio(links), dim, label};
}

Rational rho_from_components(int d, const std::vector<KillingComponent>& comps) {
  std::vector<std::pair<Rational, int>> v;
  for (const auto& c : comps) v.emplace_back(c.c, c.dim);
  return killing::einstein_constant(d, v);
}

SpaceModel two_summand(const std::string& display, const std::string& algebra, int dim_g, int dim_k, int d1, int d2,
                       const Rational& c111, const Rational& c112, const Rational& c122, const Rational& c222) {
  SpaceModel M;
  M.display = display;
  M.algebra = algebra;
  M.dim_g = dim_g;
  M.dim_k = dim_k;
  M.summands = lich::SummandSet({"1", "2"}, {d1, d2});
  if (!c111.is_zero()) M.constants.set("1", "1", "1", c111);
  if (!c112.is_zero()) M.constants.set("1", "1", "2", c112);
  if (!c122.is_zero()) M.constants.set("1", "2", "2", c122);
  if (!c222.is_zero()) M.constants.set("2", "2", "2", c222);
  return M;
}

void uniform_casimir(SpaceModel& M, const Rational& a, const std::string& source) {
  M.casimir = CasimirData{std::vector<Rational>(M.summands.size(), a), source};
}

SpaceModel flag(const std::string& alg) {
  auto id = rootsys::RootSystemId::parse(alg);
  require(id.rank() >= 2, "flag: rank >= 2 needed (su(n) n >= 3, so(2n) n >= 3)");
  SpaceModel M;
  M.algebra = id.algebra();
  M.dim_g = id.dim_g();
  M.dim_k = id.rank();
  std::string big = M.algebra;
  std::transform(big.begin(), big.end(), big.begin(), ::toupper);
  M.display = big + "/T" + std::to_string(id.rank());
  auto roots = rootsys::enumerate_positive_roots(id);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < roots.size(); ++i) labels.push_back("a" + std::to_string(i + 1));
  M.summands = lich::SummandSet(labels, std::vector<int>(roots.size(), 2));
  Rational b = rootsys::flag_b_constant(id);
  for (const auto& t : rootsys::bracket_triples(id)) M.constants.set(labels[t[0]], labels[t[1]], labels[t[2]], b);
  M.killing = {{Rational(0), id.rank(), "maximal torus (abelian)"}};
  uniform_casimir(M, rootsys::root_length_killing(id), "Cas on a root space is |alpha|^2 for the Killing form");
  if (id.family == rootsys::Family::D) {
    M.notes.push_back("fine decomposition: each root space of so(2n) is a 2-dimensional summand");
    if (id.n == 4)
      M.errata.push_back("SO(8)/T4: lambda_p and the middle eigenvalue coincide at 2/3, so the nullity is 9, not n-1");
  }
  return M;
}

SpaceModel grassmann_square(int n) {
  require(n >= 3, "grassmann-square needs n >= 3");
  auto g = detail::so_grassmann_square(n);
  int N = n * n;
  auto M = two_summand("SO(" + std::to_string(N) + ")/SO(" + std::to_string(n) + ")xSO(" + std::to_string(n) + ")",
                       "so(" + std::to_string(N) + ")", N * (N - 1) / 2, n * (n - 1), g.d1, g.d1, g.c111, g.c112,
                       g.c112, g.c111);
  auto c = reg("so(n)", "so(n^2)", "tensor", n * (n - 1) / 2, {{"n", n}});
  M.killing = {c, c};
  uniform_casimir(M, 2 * Rational(n - 1) / Rational(n * (n * n - 2)), "quoted Casimir constant 2(n-1)/(n(n^2-2))");
  M.notes.push_back("[112] = [122] closed form; [111] = [222] recovered from rho");
  return M;
}

SpaceModel grassmann_square_sp(int n) {
  require(n >= 2, "grassmann-square-sp needs n >= 2");
  int N = 4 * n * n;
  int d1 = n * (n - 1) * (2 * n + 1) * (2 * n + 1);
  SpaceModel M;
  M.display = "SO(" + std::to_string(N) + ")/Sp(" + std::to_string(n) + ")xSp(" + std::to_string(n) + ")";
  M.algebra = "so(" + std::to_string(N) + ")";
  M.dim_g = N * (N - 1) / 2;
  M.dim_k = 2 * n * (2 * n + 1);
  M.summands = lich::SummandSet({"1", "2"}, {d1, d1});
  M.has_constants = false;
  M.parametric = true;
  auto c = reg("sp(n)", "so(4n^2)", "tensor", n * (2 * n + 1), {{"n", n}});
  M.killing = {c, c};
  uniform_casimir(M, Rational(2 * n + 1) / Rational(2 * n * (2 * n * n - 1)),
                  "quoted Casimir constant (2n+1)/(2n(2n^2-1))");
  M.notes.push_back("[112] = [122] unknown; [111] = [222] = 2 d1 (1 - 2 rho) - 3 [112]");
  return M;
}

SpaceModel su_triple(int p, int q) {
  require(p >= 2 && q >= 2, "su-triple needs p, q >= 2");
  int num = p * p + q * q + 1;
  require(num % (p * q) == 0, "su-triple needs pql = p^2 + q^2 + 1 with l integral");
  int l = num / (p * q);
  require(l >= 3, "su-triple needs l >= 3");
  int N = p * q + l;
  int d1 = (p * p - 1) * (q * q - 1);
  int d2 = 2 * p * q * l;
  int dim_k = (p * p - 1) + (q * q - 1) + l * l;
  killing::Params P{{"m", p * q}, {"N", N}};
  auto& R = killing::Registry::global();
  auto outer = R.ratio("su(m)", "su(N)", "standard", P);
  std::vector<KillingComponent> comps = {
      chain({outer, R.ratio("su(p)", "su(pq)", "tensor", {{"p", p}, {"q", q}})}, p * p - 1),
      chain({outer, R.ratio("su(p)", "su(pq)", "tensor", {{"p", q}, {"q", p}})}, q * q - 1),
      reg("su(m)", "su(N)", "standard", l * l - 1, {{"m", l}, {"N", N}}),
      {Rational(0), 1, "center of u(l)"},
  };
  Rational rho = rho_from_components(d1 + d2, comps);
  Rational c122 = Rational(d2) * (1 - 2 * rho);
  Rational c111 = 2 * Rational(d1) * (1 - 2 * rho) - c122;
  auto M = two_summand("SU(" + std::to_string(N) + ")/SU(" + std::to_string(p) + ")xSU(" + std::to_string(q) +
                           ")xU(" + std::to_string(l) + ")",
                       "su(" + std::to_string(N) + ")", N * N - 1, dim_k, d1, d2, c111, 0, c122, 0);
  M.killing = comps;
  M.notes.push_back("only [111] and [122] are nonzero; both recovered from rho");
  M.notes.push_back("l = " + std::to_string(l));
  return M;
}

SpaceModel sp_chain(int n) {
  require(n >= 1, "sp-chain needs n >= 1");
  int N = 3 * n - 1;
  int d1 = 2 * n * (2 * n - 1);
  int d2 = 2 * d1;
  std::vector<KillingComponent> comps = {reg("sp(n)", "sp(3n-1)", "standard", n * (2 * n + 1), {{"n", n}})};
  if (n > 1) comps.push_back(reg("su(2n-1)", "sp(3n-1)", "via-sp", (2 * n - 1) * (2 * n - 1) - 1, {{"n", n}}));
  comps.push_back({Rational(0), 1, "center of u(2n-1)"});
  Rational rho = rho_from_components(d1 + d2, comps);
  auto M = two_summand("Sp(" + std::to_string(N) + ")/Sp(" + std::to_string(n) + ")xU(" + std::to_string(2 * n - 1) +
                           ")",
                       "sp(" + std::to_string(N) + ")", N * (2 * N + 1), n * (2 * n + 1) + (2 * n - 1) * (2 * n - 1),
                       d1, d2, 0, 0, Rational(d2) * (1 - 2 * rho), 0);
  M.killing = comps;
  M.notes.push_back("intermediate subalgebra sp(n) + sp(2n-1): only [122] is nonzero");
  return M;
}

SpaceModel so_chain(int n) {
  require(n >= 3, "so-chain needs n >= 3");
  int N = 3 * n + 2;
  int d1 = n * (n + 1);
  int d2 = 2 * d1;
  std::vector<KillingComponent> comps = {
      reg("so(n)", "so(3n+2)", "standard", n * (n - 1) / 2, {{"n", n}}),
      reg("su(n+1)", "so(3n+2)", "complex", n * (n + 2), {{"n", n}}),
      {Rational(0), 1, "center of u(n+1)"},
  };
  Rational rho = rho_from_components(d1 + d2, comps);
  auto M = two_summand("SO(" + std::to_string(N) + ")/SO(" + std::to_string(n) + ")xU(" + std::to_string(n + 1) + ")",
                       "so(" + std::to_string(N) + ")", N * (N - 1) / 2, n * (n - 1) / 2 + (n + 1) * (n + 1), d1, d2,
                       0, 0, Rational(d2) * (1 - 2 * rho), 0);
  M.killing = comps;
  M.notes.push_back("intermediate subalgebra so(n) + so(2n+2): only [122] is nonzero");
  return M;
}

SpaceModel so26() {
  std::vector<KillingComponent> comps = {reg("sp(1)", "so(26)", "so20", 3), reg("sp(5)", "so(26)", "so20", 55),
                                         reg("so(6)", "so(26)", "standard", 15)};
  Rational rho = rho_from_components(252, comps);
  Rational c122(33);
  Rational c111 = 4 * Rational(132) * (Rational(1, 2) - rho) - c122;
  auto M = two_summand("SO(26)/Sp(1)xSp(5)xSO(6)", "so(26)", 325, 73, 132, 120, c111, 0, c122, 0);
  M.killing = comps;
  M.casimir = CasimirData{
      {detail::casimir_of({adjoint_of(comps[0].c, 3, 2), sp_wedge2_0(comps[1].c, 5)}),
       detail::casimir_of({su_fund(comps[0].c, 2), sp_fund(comps[1].c, 5), so_vector(comps[2].c, 6)})},
      "p1 = ad sp(1) (x) wedge^2_0 C^10, p2 = C^2 (x) C^10 (x) R^6"};
  M.notes.push_back("[122] = 33 quoted; [111] recovered from rho");
  return M;
}

SpaceModel so8_g2() {
  auto M = two_summand("Spin(8)/G2", "so(8)", 28, 14, 7, 7, Rational(7, 6), 0, Rational(7, 6), 0);
  M.summands.multiplicity_free = false;
  M.killing = {reg("g2", "so(8)", "spin7", 14)};
  M.rho = Rational(5, 12);
  uniform_casimir(M, detail::casimir_of({g2_seven(M.killing[0].c)}), "both summands are the 7-dim g2 module");
  M.notes.push_back("the two 7-dim summands are equivalent: the matrix only bounds the spectrum");
  return M;
}

SpaceModel e6_su2_so6() {
  auto M = two_summand("E6/SU(2)xSO(6)", "e6", 78, 18, 20, 40, 0, 0, 10, 0);
  M.killing = {reg("su(2)", "e6", "su6-su2", 3), reg("so(6)", "e6", "su6-su2", 15)};
  Rational c2 = M.killing[0].c, c6 = M.killing[1].c;
  M.casimir = CasimirData{{detail::casimir_of({so_sym2_0(c6, 6)}),
                           detail::casimir_of({su_fund(c2, 2), su_sym2(c6, 4)})},
                          "p1 = sym^2_0 R^6, p2 = C^2 (x) sym^2 C^4 (so(6) = su(4))"};
  M.notes.push_back("[122] = 10 quoted");
  return M;
}

SpaceModel e8_spin9() {
  auto M = two_summand("E8/Spin(9)", "e8", 248, 36, 84, 128, 14, 0, Rational(224, 5), 0);
  M.killing = {reg("spin(9)", "e8", "spin16", 36)};
  Rational c = M.killing[0].c;
  M.casimir = CasimirData{{detail::casimir_of({so9_wedge3(c)}), detail::casimir_of({so9_spin_vector(c)})},
                          "p1 = wedge^3 R^9, p2 = the 128-dim spin(9) module"};
  M.notes.push_back("[122] = 224/5 quoted; [111] = 14 from the first Ricci eigenvalue");
  return M;
}

SpaceModel e8_su5su5() {
  auto M = two_summand("E8/SU(5)xSU(5)", "e8", 248, 48, 100, 100, 0, 20, 20, 0);
  auto c = reg("su(5)", "e8", "su5su5", 24);
  M.killing = {c, c};
  uniform_casimir(M, detail::casimir_of({su_fund(c.c, 5), su_wedge2(c.c, 5)}), "each summand is C^5 (x) wedge^2 C^5");
  M.notes.push_back("[112] = [122] = 20 quoted; [111] = [222] = 0");
  return M;
}

SpaceModel e8_su3x4() {
  SpaceModel M;
  M.display = "E8/SU(3)^4";
  M.algebra = "e8";
  M.dim_g = 248;
  M.dim_k = 32;
  M.summands = lich::SummandSet({"1", "2", "3", "4"}, {54, 54, 54, 54});
  for (int i = 1; i <= 4; ++i) {
    auto s = std::to_string(i);
    M.constants.set(s, s, s, Rational(36, 5));
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) M.constants.set(s, std::to_string(j), std::to_string(k), Rational(27, 5));
  }
  auto c = reg("su(3)", "e8", "4su3", 8);
  M.killing = {c, c, c, c};
  uniform_casimir(M, detail::casimir_of({su_fund(c.c, 3), su_fund(c.c, 3), su_fund(c.c, 3)}),
                  "each summand is a product of three fundamental su(3) modules");
  M.notes.push_back("[iii] = 36/5, [ijk] = 27/5 quoted");
  return M;
}

using Block = std::set<int>;

Block block(const std::string& s) {
  Block b;
  for (char ch : s) b.insert(ch - '0');
  return b;
}

std::string block_label(const Block& b) {
  std::string s;
  for (int x : b) s += std::to_string(x);
  return s;
}

// summands indexed by 4-subsets; [a b c] = value whenever c is the symmetric difference of a and b
SpaceModel block_design(const std::vector<std::string>& names, const Rational& value, bool allow_disjoint) {
  std::vector<Block> blocks;
  for (const auto& n : names) blocks.push_back(block(n));
  std::map<Block, std::size_t> where;
  for (std::size_t i = 0; i < blocks.size(); ++i) where[blocks[i]] = i;
  SpaceModel M;
  M.summands = lich::SummandSet(names, std::vector<int>(names.size(), 16));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      Block inter, diff;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::inserter(inter, inter.end()));
      if (inter.empty() && allow_disjoint) continue;
      if (inter.size() != 2)
        throw InvalidParameters("blocks " + names[i] + " and " + names[j] + " do not meet in exactly two numbers");
      std::set_symmetric_difference(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                                    std::inserter(diff, diff.end()));
      auto it = where.find(diff);
      if (it == where.end()) throw InvalidParameters("symmetric difference " + block_label(diff) + " is not a summand");
      M.constants.set(names[i], names[j], names[it->second], value);
    }
  }
  return M;
}

SpaceModel e7_su2x7() {
  auto M = block_design({"1234", "1357", "1256", "2457", "3456", "1467", "2367"}, Rational(16, 9), false);
  M.display = "E7/SU(2)^7";
  M.algebra = "e7";
  M.dim_g = 133;
  M.dim_k = 21;
  auto c = reg("su(2)", "e7", "7su2", 3);
  M.killing = std::vector<KillingComponent>(7, c);
  uniform_casimir(M, detail::casimir_of({su_fund(c.c, 2), su_fund(c.c, 2), su_fund(c.c, 2), su_fund(c.c, 2)}),
                  "each summand is a product of four fundamental su(2) modules");
  M.notes.push_back("constants all equal 16/9; the bracket of two summands lands in the symmetric difference");
  return M;
}

SpaceModel e8_su2x8() {
  auto M = block_design({"1234", "5678", "1256", "3478", "1278", "3456", "1458", "2367", "1467", "2358", "1357",
                         "2468", "1368", "2457"},
                        Rational(16, 15), true);
  M.display = "E8/SU(2)^8";
  M.algebra = "e8";
  M.dim_g = 248;
  M.dim_k = 24;
  auto c = reg("so(4)", "e8", "4so4", 6);
  M.killing = std::vector<KillingComponent>(4, c);
  uniform_casimir(M, detail::casimir_of({su_fund(c.c, 2), su_fund(c.c, 2), su_fund(c.c, 2), su_fund(c.c, 2)}),
                  "each summand is a product of four fundamental su(2) modules; su(2) has the ratio of so(4)");
  M.notes.push_back("constants all equal 16/15; complementary blocks bracket to zero");
  M.errata.push_back("lambda_max: one source prints 14/5; 7b/8 with b = 16/15 gives 14/15, as in the table");
  return M;
}

struct GwsRow {
  const char* name;
  const char* display;
  const char* algebra;
  int dim_g, dim_k;
};

constexpr GwsRow kGws[] = {
    {"f4-spin8", "F4/Spin(8)", "f4", 52, 28},
    {"e6-spin8", "E6/Spin(8)xR^2", "e6", 78, 30},
    {"e7-so8", "E7/SO(8)", "e7", 133, 28},
    {"e7-spin8-3su2", "E7/Spin(8)xSU(2)^3", "e7", 133, 37},
    {"e8-spin8x2", "E8/Spin(8)xSpin(8)", "e8", 248, 56},
};

SpaceModel gws(const std::string& name) {
  const GwsRow* row = nullptr;
  for (const auto& r : kGws)
    if (name == r.name) row = &r;
  if (!row) throw InvalidParameters("gws: unknown space '" + name + "'");
  int d = (row->dim_g - row->dim_k) / 3;
  SpaceModel M;
  M.display = row->display;
  M.algebra = row->algebra;
  M.dim_g = row->dim_g;
  M.dim_k = row->dim_k;
  M.summands = lich::SummandSet({"1", "2", "3"}, {d, d, d});
  std::string n = name;
  if (n == "f4-spin8") {
    M.killing = {reg("spin(8)", "f4", "maximal", 28)};
    uniform_casimir(M, detail::casimir_of({so_vector(M.killing[0].c, 8)}), "8v, 8s, 8c of spin(8)");
  } else if (n == "e6-spin8") {
    M.killing = {reg("so(8)", "e6", "so10", 28), {Rational(0), 2, "R^2 (abelian)"}};
  } else if (n == "e7-so8") {
    M.killing = {reg("so(8)", "e7", "su8", 28)};
    uniform_casimir(M, detail::casimir_of({so_sym2_0(M.killing[0].c, 8)}), "sym^2_0 of 8v, 8s, 8c");
  } else if (n == "e7-spin8-3su2") {
    auto a = reg("so(8)", "e7", "so12", 28);
    auto b = reg("su(2)", "e7", "so12-su2", 3);
    M.killing = {a, b, b, b};
    uniform_casimir(M, detail::casimir_of({so_vector(a.c, 8), su_fund(b.c, 2), su_fund(b.c, 2)}),
                    "8 (x) C^2 (x) C^2 for each triality image");
  } else {
    auto a = reg("so(8)", "e8", "so16", 28);
    M.killing = {a, a};
    uniform_casimir(M, detail::casimir_of({so_vector(a.c, 8), so_vector(a.c, 8)}), "8 (x) 8 for each triality image");
  }
  M.rho = rho_from_components(3 * d, M.killing);
  M.constants.set("1", "2", "3", Rational(d) * (1 - 2 * M.rho));
  M.notes.push_back("generalized Wallach space: only [123] is nonzero");
  return M;
}

struct CriteriaRow {
  const char* name;
  const char* display;
  const char* algebra;
  int dim_g, dim_k, r;
  bool mf;
};

constexpr CriteriaRow kCriteriaOnly[] = {
    {"e6-so3x3", "E6/SO(3)^3", "e6", 78, 9, 5, false},
    {"e8-so5", "E8/SO(5)", "e8", 248, 10, 2, true},
    {"e8-so9", "E8/SO(9)", "e8", 248, 36, 3, false},
    {"e8-so3x4", "E8/SO(3)^4", "e8", 248, 12, 9, false},
    {"e8-so5x2", "E8/SO(5)xSO(5)", "e8", 248, 20, 6, false},
    {"e8-su3x2", "E8/SU(3)xSU(3)", "e8", 248, 16, 5, false},
};

SpaceModel criteria_only(const std::string& name) {
  const CriteriaRow* row = nullptr;
  for (const auto& r : kCriteriaOnly)
    if (name == r.name) row = &r;
  if (!row) throw InvalidParameters("unknown catalog space '" + name + "'");
  SpaceModel M;
  M.display = row->display;
  M.algebra = row->algebra;
  M.dim_g = row->dim_g;
  M.dim_k = row->dim_k;
  M.has_constants = false;
  std::string n = name;
  if (n == "e6-so3x3") {
    auto c = reg("so(3)", "e6", "3su3", 3);
    M.killing = {c, c, c};
  } else if (n == "e8-so5") {
    M.killing = {reg("so(5)", "e8", "maximal", 10)};
  } else if (n == "e8-so9") {
    M.killing = {reg("so(9)", "e8", "su9", 36)};
  } else if (n == "e8-so3x4") {
    auto c = reg("so(3)", "e8", "4su3", 3);
    M.killing = {c, c, c, c};
  } else if (n == "e8-so5x2") {
    auto c = reg("so(5)", "e8", "so5so5", 10);
    M.killing = {c, c};
  } else {
    auto c = reg("su(3)", "e8", "su3su3", 8);
    M.killing = {c, c};
  }
  M.rho = rho_from_components(row->dim_g - row->dim_k, M.killing);
  M.notes.push_back("r = " + std::to_string(row->r) + (row->mf ? "" : " (not multiplicity-free)") +
                    "; structural constants not available, criteria only");
  return M;
}

SpaceModel group_killing(const std::string& alg) {
  auto row = criteria::casimir_row(alg);
  SpaceModel M;
  M.display = "bi-invariant metric on the group with Lie algebra " + row.algebra;
  M.algebra = row.algebra;
  M.dim_g = row.dim_g;
  M.has_constants = false;
  M.rho = Rational(1, 4);
  return M;
}

long param(const SpaceSpec& s, const std::string& key) {
  auto it = s.params.find(key);
  if (it == s.params.end()) throw InvalidParameters("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Flag: return "flag";
    case Family::GrassmannSquare: return "grassmann-square";
    case Family::GrassmannSquareSp: return "grassmann-square-sp";
    case Family::SuTriple: return "su-triple";
    case Family::SpChain: return "sp-chain";
    case Family::SoChain: return "so-chain";
    case Family::So26: return "so26";
    case Family::So8G2: return "so8-g2";
    case Family::E6Su2So6: return "e6-su2-so6";
    case Family::E8Spin9: return "e8-spin9";
    case Family::E8Su5Su5: return "e8-su5su5";
    case Family::E8Su3x4: return "e8-su3x4";
    case Family::E7Su2x7: return "e7-su2x7";
    case Family::E8Su2x8: return "e8-su2x8";
    case Family::Gws: return "gws";
    case Family::Som: return "som";
    case Family::GroupKilling: return "group-killing";
    case Family::CriteriaOnly: return "catalog";
  }
  return "?";
}

SpaceModel build(const SpaceSpec& spec) {
  SpaceModel M;
  switch (spec.family) {
    case Family::Flag: M = flag(spec.name); break;
    case Family::GrassmannSquare: M = grassmann_square(static_cast<int>(param(spec, "n"))); break;
    case Family::GrassmannSquareSp: M = grassmann_square_sp(static_cast<int>(param(spec, "n"))); break;
    case Family::SuTriple:
      M = su_triple(static_cast<int>(param(spec, "p")), static_cast<int>(param(spec, "q")));
      break;
    case Family::SpChain: M = sp_chain(static_cast<int>(param(spec, "n"))); break;
    case Family::SoChain: M = so_chain(static_cast<int>(param(spec, "n"))); break;
    case Family::So26: M = so26(); break;
    case Family::So8G2: M = so8_g2(); break;
    case Family::E6Su2So6: M = e6_su2_so6(); break;
    case Family::E8Spin9: M = e8_spin9(); break;
    case Family::E8Su5Su5: M = e8_su5su5(); break;
    case Family::E8Su3x4: M = e8_su3x4(); break;
    case Family::E7Su2x7: M = e7_su2x7(); break;
    case Family::E8Su2x8: M = e8_su2x8(); break;
    case Family::Gws: M = gws(spec.name); break;
    case Family::Som: {
      auto m = build_som(spec.factors);
      m.spec = spec;
      m.spec.factors = som_order(spec.factors);
      return m;
    }
    case Family::GroupKilling: M = group_killing(spec.name); break;
    case Family::CriteriaOnly: M = criteria_only(spec.name); break;
  }
  M.spec = spec;
  if (M.has_constants) {
    int total = M.summands.total_dim();
    if (total != M.dim_g - M.dim_k)
      throw InvalidParameters(M.display + ": summand dimensions add to " + std::to_string(total) + ", not dim g - dim k");
    if (M.rho.is_zero()) M.rho = rho_from_components(total, M.killing);
    detail::check_einstein(M);
  } else if (M.rho.is_zero() && !M.killing.empty()) {
    M.rho = rho_from_components(M.dim_g - M.dim_k, M.killing);
  }
  return M;
}

}  // namespace einstab::spaces
