#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "einstab/rational.hpp"

namespace einstab::oracle {

using exact::Rational;

// so(m) with a -Kil-orthonormal basis adapted to g = k + p_1 + ... + p_r
struct MatrixAlgebraModel {
  int m = 0;
  std::string target;
  std::vector<Eigen::MatrixXd> basis;  // k first, then each summand in order
  int dim_k = 0;
  std::vector<std::string> labels;
  std::vector<int> offsets;  // summand i is basis[offsets[i] .. offsets[i] + dims[i])
  std::vector<int> dims;

  int dim_g() const { return static_cast<int>(basis.size()); }
  int dim_p() const { return dim_g() - dim_k; }
};

// <X, Y> = -Kil_so(m)(X, Y) = -(m - 2) tr(XY)
double killing_inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, int m);

// targets: som:sphere(k)x<l> (spheres of any sizes), som:adjoint(su(3))x2, grassmann:n=3,
// flag:so(2n), symmetric:so(m)
MatrixAlgebraModel build_model(const std::string& target);  // ParseError, UnsupportedFactor

// C[a][b][c] = <[E_a, E_b], E_c>, flattened a * n^2 + b * n + c
struct StructureTensor {
  int n = 0;
  std::vector<double> c;
  double at(int a, int b, int k) const { return c[(static_cast<std::size_t>(a) * n + b) * n + k]; }
};

StructureTensor structure_tensor(const MatrixAlgebraModel& model);         // OpenMP over a
StructureTensor structure_tensor_serial(const MatrixAlgebraModel& model);  // reference

double orthonormality_error(const MatrixAlgebraModel& model);
double k_closure_error(const MatrixAlgebraModel& model, const StructureTensor& t);

struct BruteConstant {
  int i = 0, j = 0, k = 0;  // summand indices, i <= j <= k
  double value = 0;
  Rational nearest;
  double deviation = 0;  // |value - nearest|
};

// continued fractions, denominator at most max_den
Rational nearest_rational(double x, long max_den = 1000000);

std::vector<BruteConstant> structural_constants_bruteforce(const MatrixAlgebraModel& model, const StructureTensor& t);
std::vector<BruteConstant> structural_constants_serial(const MatrixAlgebraModel& model, const StructureTensor& t);

struct IdentityCheck {
  std::string name;
  double error = 0;
  bool pass = false;
};

struct CasimirReport {
  std::vector<IdentityCheck> checks;
  std::vector<double> casimir;  // Cas_chi on each summand (mean diagonal)
  std::vector<double> ricci;    // 1/4 + Cas/2 on each summand
  bool einstein = false;        // ricci constant to tolerance
  bool pass() const;
};

CasimirReport verify_casimir_identities(const MatrixAlgebraModel& model, const StructureTensor& t,
                                        const std::vector<BruteConstant>& constants, double tol = 1e-9);

// Lichnerowicz matrix from numeric constants, sorted eigenvalues (the kernel included)
std::vector<double> lich_spectrum(const MatrixAlgebraModel& model, const std::vector<BruteConstant>& constants);

struct ConstantCheck {
  std::string label;  // "[i j k]" with summand labels
  double brute = 0;
  Rational reconstructed;
  std::optional<Rational> exact;
  double rel_error = 0;
  bool pass = false;
};

struct OracleReport {
  std::string target;
  int m = 0, dim_k = 0;
  std::vector<std::string> labels;
  std::vector<int> dims;
  double orthonormality = 0, closure = 0;
  std::vector<ConstantCheck> constants;
  CasimirReport casimir;
  std::optional<bool> einstein_exact;
  std::vector<double> spectrum, exact_spectrum;
  double spectrum_error = 0;
  std::vector<std::string> notes;

  bool pass() const;
};

OracleReport run_oracle(const std::string& target);
std::vector<std::string> oracle_targets();

struct LambdaMaxReport {
  std::vector<double> spectrum;
  double lambda_p = 0, lambda_max = 0;
  Rational eigenvector_formula;  // (m - 1 - 2 dim k_i / m_i)/(m - 2)
  Rational table_formula;        // (m_i (m - 1) - dim k_i)/(m_i (m - 2))
  bool eigenvector_matches = false, table_matches = false;
  std::string conclusion;
};

LambdaMaxReport resolve_som_lambda_max();

}  // namespace einstab::oracle
