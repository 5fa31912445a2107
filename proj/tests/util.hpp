#pragma once

#include <string>
#include <vector>

#include "einstab/matrix.hpp"
#include "einstab/rational.hpp"
#include "einstab/spectrum.hpp"

inline einstab::exact::Rational R(const std::string& s) { return einstab::exact::Rational::parse(s); }

inline einstab::exact::Spectrum S(std::vector<std::pair<std::string, int>> pairs) {
  std::vector<std::pair<einstab::exact::Rational, int>> v;
  for (auto& [x, k] : pairs) v.emplace_back(R(x), k);
  return einstab::exact::make_spectrum(std::move(v));
}

inline einstab::exact::SymRationalMatrix M(std::vector<std::vector<std::string>> rows) {
  einstab::exact::SymRationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = R(rows[i][j]);
  return m;
}
