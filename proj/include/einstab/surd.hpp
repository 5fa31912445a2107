#pragma once

#include <map>
#include <string>

#include "einstab/rational.hpp"

namespace einstab::exact {

// sum of q * sqrt(s), s square-free; equality is exact since square roots of distinct
// square-free integers are linearly independent over Q
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& q);  // NOLINT(implicit)
  static SurdSum sqrt(const Rational& x);  // x >= 0

  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  SurdSum& operator*=(const Rational& q);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(SurdSum a, const Rational& q) { return a *= q; }
  friend SurdSum operator*(const Rational& q, SurdSum a) { return a *= q; }
  // only defined when one side is rational or both are single terms
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

  bool is_zero() const { return terms_.empty(); }
  double to_double() const;
  std::string str() const;
  friend bool operator==(const SurdSum&, const SurdSum&) = default;

  const std::map<long, Rational>& terms() const { return terms_; }

 private:
  std::map<long, Rational> terms_;  // square-free radicand -> coefficient, no zeros
};

}  // namespace einstab::exact
