#pragma once

#include <array>
#include <string>
#include <vector>

#include "einstab/matrix.hpp"
#include "einstab/spectrum.hpp"

namespace einstab::rootsys {

using exact::Rational;

enum class Family { A, D, E6, E7, E8 };

// A with n means su(n); D with n means so(2n).
struct RootSystemId {
  Family family = Family::A;
  int n = 0;

  static RootSystemId parse(const std::string& algebra);  // "su(5)", "so(12)", "e7"
  std::string algebra() const;
  int dim_g() const;
  int rank() const;
  int positive_root_count() const { return (dim_g() - rank()) / 2; }
};

using RootVector = std::vector<Rational>;

struct FlagData {
  RootSystemId id;
  std::vector<RootVector> positive_roots;
  int kappa = 0;
  Rational b;
  exact::SymRationalMatrix adjacency;
};

std::vector<RootVector> enumerate_positive_roots(const RootSystemId& id);
exact::SymRationalMatrix adjacency_matrix(const RootSystemId& id);
Rational flag_b_constant(const RootSystemId& id);
exact::Spectrum flag_spectrum(const RootSystemId& id);
FlagData flag_data(const RootSystemId& id);

// Unordered index triples {a, b, c} of positive roots with c = a + b or c = |a - b|.
std::vector<std::array<int, 3>> bracket_triples(const RootSystemId& id);

// Killing-form squared length of any root: rank / |roots| (simply laced, equal lengths).
Rational root_length_killing(const RootSystemId& id);

}  // namespace einstab::rootsys
