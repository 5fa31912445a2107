#include "einstab/lich.hpp"

#include <algorithm>

#include "einstab/errors.hpp"

namespace einstab::lich {

SummandSet::SummandSet(std::vector<std::string> l, std::vector<int> d, bool mf)
    : labels(std::move(l)), dims(std::move(d)), multiplicity_free(mf) {
  if (labels.empty() || labels.size() != dims.size())
    throw InvalidParameters("summand labels and dimensions must be nonempty and of equal length");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvalidParameters("summand labels must be distinct");
  for (int x : dims)
    if (x <= 0) throw InvalidParameters("summand dimensions must be positive");
}

std::size_t SummandSet::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw UnknownLabel("summand '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

int SummandSet::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

StructuralConstants::Key StructuralConstants::key(std::string a, std::string b, std::string c) {
  Key k{std::move(a), std::move(b), std::move(c)};
  std::sort(k.begin(), k.end());
  return k;
}

void StructuralConstants::set(const std::string& a, const std::string& b, const std::string& c,
                              const Rational& v) {
  if (v.sign() < 0) throw InvalidParameters("structural constants are sums of squares");
  auto k = key(a, b, c);
  if (v.is_zero())
    table_.erase(k);
  else
    table_[k] = v;
}

Rational StructuralConstants::get(const std::string& a, const std::string& b, const std::string& c) const {
  auto it = table_.find(key(a, b, c));
  return it == table_.end() ? Rational(0) : it->second;
}

IndexedConstants index_constants(const SummandSet& s, const StructuralConstants& sc) {
  IndexedConstants ic;
  ic.r = s.size();
  ic.full_sum.assign(ic.r, Rational(0));
  ic.pair_sum.assign(ic.r, std::vector<Rational>(ic.r, Rational(0)));
  for (const auto& [key, v] : sc.table()) {
    std::array<std::size_t, 3> t{s.index(key[0]), s.index(key[1]), s.index(key[2])};
    // every distinct ordered arrangement (x, y, z) of the triple contributes once
    std::sort(t.begin(), t.end());
    do {
      ic.full_sum[t[2]] += v;
      ic.pair_sum[t[1]][t[2]] += v;
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return ic;
}

exact::SymRationalMatrix assemble_lich_matrix(const SummandSet& s, const StructuralConstants& sc) {
  auto ic = index_constants(s, sc);
  exact::SymRationalMatrix m(ic.r);
  for (std::size_t k = 0; k < ic.r; ++k) {
    Rational dk(s.dims[k]);
    // sum over j != k, all i, of [ijk]
    m(k, k) = (ic.full_sum[k] - ic.pair_sum[k][k]) / dk;
    for (std::size_t q = 0; q < ic.r; ++q)
      if (q != k) m(k, q) = -ic.pair_sum[q][k] / dk;
  }
  return m;
}

std::vector<Rational> ricci_eigenvalues(const SummandSet& s, const StructuralConstants& sc) {
  auto ic = index_constants(s, sc);
  std::vector<Rational> rho(ic.r);
  for (std::size_t k = 0; k < ic.r; ++k)
    rho[k] = Rational(1, 2) - ic.full_sum[k] / Rational(4 * s.dims[k]);
  return rho;
}

bool casimir_consistency(const SummandSet& s, const StructuralConstants& sc, const std::vector<Rational>& a) {
  if (a.size() != s.size()) throw InvalidParameters("one Casimir constant per summand");
  auto ic = index_constants(s, sc);
  for (std::size_t k = 0; k < ic.r; ++k)
    if (ic.full_sum[k] != Rational(s.dims[k]) * (Rational(1) - Rational(2) * a[k])) return false;
  return true;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Stable: return "G-stable";
    case Kind::SemistableBoundary: return "G-semistable-boundary";
    case Kind::NeutrallyStable: return "G-neutrally-stable";
    case Kind::UnstableLocalMin: return "G-unstable-local-min";
    case Kind::UnstableSaddle: return "G-unstable-saddle";
  }
  return "?";
}

Kind kind_from_name(const std::string& name) {
  for (Kind k : {Kind::Stable, Kind::SemistableBoundary, Kind::NeutrallyStable, Kind::UnstableLocalMin,
                 Kind::UnstableSaddle})
    if (kind_name(k) == name) return k;
  throw ParseError("unknown verdict kind '" + name + "'");
}

bool is_unstable(Kind k) { return k == Kind::UnstableLocalMin || k == Kind::UnstableSaddle; }

namespace {

// sign of (root - point) for an isolated root, refined until decided
int compare_root(exact::IsolatedRoot& root, const Rational& point) { return root.compare(point); }

}  // namespace

StabilityVerdict classify(const Rational& rho, const SummandSet& s, const exact::Spectrum& spec) {
  return classify(rho, s, exact::FullSpectrum{spec, {}});
}

StabilityVerdict classify(const Rational& rho, const SummandSet& s, exact::FullSpectrum spec) {
  if (spec.rational.multiplicity(Rational(0)) < 1)
    throw MissingKernel("spectrum has no zero eigenvalue; the structural constants are inconsistent");

  StabilityVerdict v;
  v.two_rho = Rational(2) * rho;
  std::vector<std::pair<Rational, int>> tt;
  for (const auto& [x, m] : spec.rational.pairs) {
    int mult = x.is_zero() ? m - 1 : m;
    if (mult > 0) tt.emplace_back(x, mult);
  }
  v.tt_rational = exact::make_spectrum(tt);
  if (v.tt_rational.total() == 0 && spec.irrational.empty())
    throw InvalidParameters("no trace-free invariant directions (isotropy irreducible)");

  // rational part
  bool have = false;
  for (const auto& [x, m] : v.tt_rational.pairs) {
    if (x < v.two_rho) v.coindex += m;
    if (x == v.two_rho) v.nullity += m;
    if (!have) v.lambda_p = {x, x};
    v.lambda_p_max = {x, x};
    have = true;
  }
  // irrational part: never equal to 2rho
  for (auto& root : spec.irrational) {
    int c = compare_root(root, v.two_rho);
    if (c < 0) v.coindex += root.mult;
    if (!have || root.where.hi < v.lambda_p.lo) v.lambda_p = root.where;
    if (!have || root.where.lo > v.lambda_p_max.hi) v.lambda_p_max = root.where;
    have = true;
  }

  v.g_nondegenerate = v.nullity == 0;
  bool lp_below = v.lambda_p.hi < v.two_rho;
  bool lp_equal = v.lambda_p.exact() && v.lambda_p.lo == v.two_rho;
  bool max_below = v.lambda_p_max.hi < v.two_rho;
  if (lp_below || v.coindex > 0)
    v.kind = max_below ? Kind::UnstableLocalMin : Kind::UnstableSaddle;
  else if (lp_equal)
    v.kind = Kind::NeutrallyStable;
  else
    v.kind = Kind::Stable;

  v.conclusive = s.multiplicity_free || is_unstable(v.kind);

  if (v.kind == Kind::Stable) {
    v.implied.insert("G-semistable");
    v.implied.insert("local-max-of-scal");
  }
  if (v.kind == Kind::NeutrallyStable) v.implied.insert("G-semistable");
  if (is_unstable(v.kind)) {
    v.implied.insert("unstable");
    v.implied.insert("dynamically-unstable");
  }
  if (v.kind == Kind::UnstableLocalMin && s.multiplicity_free) v.implied.insert("local-min-of-scal");
  if (v.g_nondegenerate)
    v.implied.insert("G-rigid");
  else
    v.implied.insert("G-degenerate");
  return v;
}

}  // namespace einstab::lich
