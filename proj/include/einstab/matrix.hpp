#pragma once

#include <cstddef>
#include <vector>

#include "einstab/rational.hpp"

namespace einstab::exact {

// Dense square matrix of rationals. Symmetry is not required.
class SymRationalMatrix {
 public:
  SymRationalMatrix() = default;
  explicit SymRationalMatrix(std::size_t order) : n_(order), a_(order * order) {}

  std::size_t order() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Rational trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  friend bool operator==(const SymRationalMatrix& a, const SymRationalMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

}  // namespace einstab::exact
