#pragma once

#include <string>
#include <vector>

#include "einstab/spaces.hpp"

namespace einstab::spaces::detail {

struct GrassmannSquare {
  int d1 = 0;
  Rational c111, c112, rho;
};

// SO(n^2)/SO(n)xSO(n): [112] = [122] closed form, rho from the Casimir constant, [111] from rho
GrassmannSquare so_grassmann_square(int n);

// Cas of a K-module V_1 (x) ... (x) V_s relative to -Kil_g: sum of c_j dim k_j l(V_j) / (dim V_j 2 h_j)
struct RepFactor {
  Rational c;      // Killing ratio of k_j in g
  int dim_k = 0;   // dim k_j
  int index = 0;   // Dynkin index of V_j, normalised so the adjoint has 2 h_j
  int dim_rep = 0;
  int dual_coxeter = 0;
};

Rational casimir_of(const std::vector<RepFactor>& factors);

void require(bool ok, const std::string& what);  // InvalidParameters
void check_einstein(const SpaceModel& m);          // EinsteinViolation

}  // namespace einstab::spaces::detail
