#include "einstab/surd.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "einstab/errors.hpp"

namespace einstab::exact {

namespace {

// v = f^2 * s with s square-free
std::pair<mpz_class, long> split_square(mpz_class v) {
  mpz_class f = 1;
  mpz_class s = 1;
  for (long p = 2; mpz_class(p) * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) s *= p;
  }
  s *= v;
  if (!s.fits_slong_p()) throw OutOfRange("radicand too large");
  return {f, s.get_si()};
}

}  // namespace

SurdSum::SurdSum(const Rational& q) {
  if (!q.is_zero()) terms_[1] = q;
}

SurdSum SurdSum::sqrt(const Rational& x) {
  if (x.sign() < 0) throw OutOfRange("square root of a negative rational");
  SurdSum r;
  if (x.is_zero()) return r;
  auto [f, s] = split_square(x.num() * x.den());
  r.terms_[s] = Rational(f, x.den());
  return r;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [s, q] : o.terms_) {
    Rational v = terms_[s] + q;
    if (v.is_zero())
      terms_.erase(s);
    else
      terms_[s] = v;
  }
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) { return *this += o * Rational(-1); }

SurdSum& SurdSum::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= q;
  return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum r;
  for (const auto& [s1, q1] : a.terms_) {
    for (const auto& [s2, q2] : b.terms_) {
      long g = std::gcd(s1, s2);
      SurdSum t;
      t.terms_[(s1 / g) * (s2 / g)] = q1 * q2 * Rational(g);
      r += t;
    }
  }
  return r;
}

double SurdSum::to_double() const {
  double v = 0;
  for (const auto& [s, q] : terms_) v += q.to_double() * std::sqrt(static_cast<double>(s));
  return v;
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q.str();
    if (s != 1) os << "*sqrt(" << s << ")";
  }
  return os.str();
}

}  // namespace einstab::exact
