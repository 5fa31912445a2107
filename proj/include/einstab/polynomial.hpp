#pragma once

#include <string>
#include <utility>
#include <vector>

#include "einstab/rational.hpp"

namespace einstab::exact {

// Coefficients lowest degree first; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial x_minus(const Rational& root);  // x - root

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// quotient, remainder
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
// Yun: returns (factor_i, i) with p = lc * prod factor_i^i, factors square-free and monic
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace einstab::exact
