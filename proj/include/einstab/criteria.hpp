#pragma once

#include <optional>
#include <string>
#include <utility>

#include "einstab/lich.hpp"
#include "einstab/rational.hpp"

namespace einstab::criteria {

using exact::Rational;

struct CasimirRow {
  std::string algebra;  // canonical name after aliasing, e.g. so(6) -> su(4)
  int dim_g = 0;
  Rational lambda_tau;
  std::optional<Rational> lambda_tau_mid;
  std::optional<Rational> lambda_tau_max;

  // su(2) has a single eigenvalue on sym_0, so it doubles as the maximum
  Rational effective_max() const { return lambda_tau_max ? *lambda_tau_max : lambda_tau; }
};

CasimirRow casimir_row(const std::string& algebra);

enum class Part { None, Sc2_i, Sc2_ii, Sc2_iii, Sc2_iv, Sc1_i, Sc1_ii, Sc1_iii, Sc1_iv };

std::string part_name(Part p);  // "sc2-i", ..., "none"
Part part_from_name(const std::string& s);

struct CriterionResult {
  Part applied = Part::None;
  std::string conclusion;  // empty when nothing fires
  std::optional<std::pair<Rational, Rational>> bound_interval;
  std::pair<Rational, Rational> thresholds;  // sc2: dim_k cut-offs; sc1: (lambda_tau, lambda_tau_max)

  bool operator==(const CriterionResult&) const = default;
};

// dim g (lt - 1)/(2 lmax) and dim g (lmax - 1)/(2 lt)
std::pair<Rational, Rational> structural_thresholds(const CasimirRow& row);

CriterionResult criterion_structural(int dim_g, int dim_k, const CasimirRow& row);
CriterionResult criterion_einstein(const Rational& rho, const CasimirRow& row);

lich::StabilityVerdict group_killing_verdict(const CasimirRow& row);

// Table column mark: "No", "✓" or "✓*". table_kind is the printed verdict of the row.
std::string table_mark(const CriterionResult& r, lich::Kind table_kind);

}  // namespace einstab::criteria
