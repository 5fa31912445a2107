#include "einstab/rational.hpp"

#include <ostream>

#include "einstab/errors.hpp"

namespace einstab::exact {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidParameters("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  s = trim(s);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("not a rational: '" + s + "'");
    return Rational(to_mpz(s));
  }
  std::string a = trim(s.substr(0, slash)), b = trim(s.substr(slash + 1));
  if (!valid_int(a) || !valid_int(b)) throw ParseError("not a rational: '" + s + "'");
  mpz_class den = to_mpz(b);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(to_mpz(a), den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidParameters("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, int e) {
  Rational out(1);
  Rational base = e < 0 ? Rational(1) / r : r;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace einstab::exact
