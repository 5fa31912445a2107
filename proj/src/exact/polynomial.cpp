#include "einstab/polynomial.hpp"

#include <sstream>

#include "einstab/errors.hpp"

namespace einstab::exact {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x_minus(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return *this * (Rational(1) / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  std::vector<Rational> out = a.c_;
  for (auto& v : out) v *= s;
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& v = c_[k];
    if (v.is_zero()) continue;
    Rational mag = abs(v);
    if (first) {
      if (v.sign() < 0) os << "-";
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidParameters("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<Rational> quo(da - db + 1);
  Rational lead_inv = Rational(1) / b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational t = rem[k + db] * lead_inv;
    quo[k] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(fp, a).first;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace einstab::exact
