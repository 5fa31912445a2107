#include "einstab/spectrum.hpp"

namespace einstab::exact {

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& f) {
  std::vector<Polynomial> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  return chain;
}

int variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// number of distinct roots in (a, b]
int roots_in(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

void isolate(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b,
             const Rational& tol, std::vector<Interval>& out) {
  int n = roots_in(chain, a, b);
  if (n == 0) return;
  if (n > 1) {
    Rational mid = (a + b) / Rational(2);
    isolate(chain, a, mid, tol, out);
    isolate(chain, mid, b, tol, out);
    return;
  }
  const Polynomial& f = chain.front();
  Rational lo = a, hi = b;
  if (f.eval(hi).is_zero()) {
    out.push_back({hi, hi});
    return;
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (f.eval(mid).is_zero()) {
      out.push_back({mid, mid});
      return;
    }
    if (roots_in(chain, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  out.push_back({lo, hi});
}

}  // namespace

std::vector<Interval> isolate_real_eigenvalues(const Polynomial& residual, const Rational& tol) {
  std::vector<Interval> out;
  if (residual.degree() < 1) return out;
  if (tol.sign() <= 0) throw InvalidParameters("tolerance must be positive");
  Polynomial f = residual.monic();
  Polynomial g = gcd(f, f.derivative());
  if (g.degree() > 0) f = divmod(f, g).first.monic();
  if (f.degree() == 1) {
    Rational r = -f.coeff(0);
    out.push_back({r, r});
    return out;
  }
  Rational bound(0);
  for (int k = 0; k < f.degree(); ++k)
    if (abs(f.coeff(k)) > bound) bound = abs(f.coeff(k));
  bound += Rational(1);
  isolate(sturm_chain(f), -bound, bound, tol, out);
  return out;
}

}  // namespace einstab::exact
