#pragma once

#include <string>
#include <utility>
#include <vector>

#include "einstab/errors.hpp"
#include "einstab/matrix.hpp"
#include "einstab/polynomial.hpp"

namespace einstab::exact {

struct Spectrum {
  std::vector<std::pair<Rational, int>> pairs;  // ascending, distinct

  int total() const;
  int multiplicity(const Rational& v) const;
  Rational weighted_sum() const;  // sum of value * mult
  std::string str() const;        // "0x1, 3/4x20, 1x15"
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum make_spectrum(std::vector<std::pair<Rational, int>> pairs);

class NonRationalSpectrum : public Error {
 public:
  NonRationalSpectrum(Spectrum partial, Polynomial residual);
  const Spectrum& partial() const { return partial_; }
  const Polynomial& residual() const { return residual_; }

 private:
  Spectrum partial_;
  Polynomial residual_;
};

Spectrum rational_spectrum(const SymRationalMatrix& m);

struct Interval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};

std::vector<Interval> isolate_real_eigenvalues(const Polynomial& residual, const Rational& tol);

// Irrational eigenvalue: an isolating interval of a square-free rational factor.
struct IsolatedRoot {
  Interval where;
  int mult = 1;
  Polynomial factor;
  // shrink until `point` lies outside the closed interval; returns -1 if root < point, +1 if above
  int compare(const Rational& point);
};

struct FullSpectrum {
  Spectrum rational;
  std::vector<IsolatedRoot> irrational;
  int total() const;
};

// Rational factoring first; leftover factors are isolated with Sturm sequences.
FullSpectrum full_spectrum(const SymRationalMatrix& m, const Rational& tol = Rational(1, 1000000));

}  // namespace einstab::exact
