#include "einstab/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "einstab/charpoly.hpp"

namespace einstab::exact {

int Spectrum::total() const {
  int t = 0;
  for (const auto& [v, k] : pairs) t += k;
  return t;
}

int Spectrum::multiplicity(const Rational& v) const {
  for (const auto& [x, k] : pairs)
    if (x == v) return k;
  return 0;
}

Rational Spectrum::weighted_sum() const {
  Rational s(0);
  for (const auto& [v, k] : pairs) s += v * Rational(k);
  return s;
}

std::string Spectrum::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    os << pairs[i].first.str() << "x" << pairs[i].second;
  }
  return os.str();
}

Spectrum make_spectrum(std::vector<std::pair<Rational, int>> pairs) {
  std::map<Rational, int> merged;
  for (auto& [v, k] : pairs) merged[v] += k;
  Spectrum s;
  for (auto& [v, k] : merged)
    if (k > 0) s.pairs.emplace_back(v, k);
  return s;
}

NonRationalSpectrum::NonRationalSpectrum(Spectrum partial, Polynomial residual)
    : Error("NonRationalSpectrum", "irreducible non-linear factor remains: " + residual.str()),
      partial_(std::move(partial)),
      residual_(std::move(residual)) {}

namespace {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

// Exact division by (y - r); returns false if r is not a root.
bool divide_root(IntPoly& p, const mpz_class& r) {
  std::size_t n = p.size() - 1;
  IntPoly q(n);
  mpz_class carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  if (p[0] + carry * r != 0) return false;
  p = std::move(q);
  return true;
}

long eval_mod(const IntPoly& p, long x, unsigned long prime) {
  unsigned long acc = 0;
  unsigned long xm = static_cast<unsigned long>(((x % static_cast<long>(prime)) + static_cast<long>(prime)) % static_cast<long>(prime));
  for (std::size_t k = p.size(); k-- > 0;) {
    unsigned long c = mpz_fdiv_ui(p[k].get_mpz_t(), prime);
    acc = static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * xm + c) % prime);
  }
  return static_cast<long>(acc);
}

// Integer roots of a monic integer polynomial, all of absolute value at most `bound`.
std::vector<mpz_class> integer_root_candidates(const IntPoly& p, const mpz_class& bound) {
  std::vector<mpz_class> out;
  constexpr unsigned long kP1 = 2305843009213693951UL;  // 2^61 - 1
  constexpr unsigned long kP2 = 4611686018427387847UL;
  if (bound <= (1L << 22)) {
    long b = bound.get_si();
    for (long x = -b; x <= b; ++x)
      if (eval_mod(p, x, kP1) == 0 && eval_mod(p, x, kP2) == 0) out.emplace_back(x);
    return out;
  }
  // wide range: isolate the real roots exactly, test integers inside each interval
  std::vector<Rational> coeffs;
  for (const auto& c : p) coeffs.emplace_back(c);
  for (const auto& iv : isolate_real_eigenvalues(Polynomial(coeffs), Rational(1, 2))) {
    mpz_class lo = iv.lo.num() / iv.lo.den() - 1;
    for (mpz_class x = lo; x <= lo + 3; ++x)
      if (iv.lo <= Rational(x) && Rational(x) <= iv.hi) out.push_back(x);
  }
  return out;
}

}  // namespace

Spectrum rational_spectrum(const SymRationalMatrix& m) {
  ScaledMatrix sm = to_integer(m);
  IntPoly p = kernels::charpoly_modular(sm.M);
  std::vector<std::pair<Rational, int>> found;

  int zeros = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros) found.emplace_back(Rational(0), zeros);

  mpz_class bound = 0;
  for (const auto& row : sm.M) {
    mpz_class s = 0;
    for (const auto& v : row) s += abs(v);
    if (s > bound) bound = s;
  }
  if (p.size() > 1) {
    for (const auto& r : integer_root_candidates(p, bound)) {
      if (r == 0) continue;
      int k = 0;
      while (p.size() > 1 && divide_root(p, r)) ++k;
      if (k) found.emplace_back(Rational(r, sm.scale), k);
    }
  }
  Spectrum s = make_spectrum(std::move(found));
  if (p.size() > 1) {
    int deg = static_cast<int>(p.size()) - 1;
    std::vector<Rational> c(p.size());
    Rational sc(sm.scale);
    for (int k = 0; k <= deg; ++k) c[k] = Rational(p[k]) * pow(sc, k - deg);
    throw NonRationalSpectrum(std::move(s), Polynomial(std::move(c)));
  }
  return s;
}

int FullSpectrum::total() const {
  int t = rational.total();
  for (const auto& r : irrational) t += r.mult;
  return t;
}

int IsolatedRoot::compare(const Rational& point) {
  while (where.lo <= point && point <= where.hi) {
    if (where.exact()) return 0;
    Rational mid = (where.lo + where.hi) / Rational(2);
    Rational fm = factor.eval(mid);
    if (fm.is_zero()) {
      where = {mid, mid};
      continue;
    }
    Rational flo = factor.eval(where.lo);
    if (flo.sign() * fm.sign() < 0)
      where.hi = mid;
    else
      where.lo = mid;
  }
  return where.hi < point ? -1 : 1;
}

FullSpectrum full_spectrum(const SymRationalMatrix& m, const Rational& tol) {
  FullSpectrum out;
  try {
    out.rational = rational_spectrum(m);
    return out;
  } catch (const NonRationalSpectrum& e) {
    out.rational = e.partial();
    for (const auto& [factor, mult] : squarefree_decomposition(e.residual())) {
      for (const auto& iv : isolate_real_eigenvalues(factor, tol)) {
        IsolatedRoot r;
        r.where = iv;
        r.mult = mult;
        r.factor = factor;
        out.irrational.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace einstab::exact
