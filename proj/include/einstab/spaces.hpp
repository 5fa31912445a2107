#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "einstab/criteria.hpp"
#include "einstab/lich.hpp"
#include "einstab/rational.hpp"
#include "einstab/spectrum.hpp"

namespace einstab::spaces {

using exact::Rational;

enum class Family {
  Flag,
  GrassmannSquare,
  GrassmannSquareSp,
  SuTriple,
  SpChain,
  SoChain,
  So26,
  So8G2,
  E6Su2So6,
  E8Spin9,
  E8Su5Su5,
  E8Su3x4,
  E7Su2x7,
  E8Su2x8,
  Gws,
  Som,
  GroupKilling,
  CriteriaOnly,
};

std::string family_name(Family f);

// An irreducible symmetric space G_i/K_i used as a factor of the som construction.
struct SymSpaceId {
  enum class Kind { SoGrassmann, SpGrassmann, Sphere, SuSo, SuSp, E6Sp4, E6F4, E7Su8, E8Spin16, F4Spin9, Adjoint };

  Kind kind = Kind::Sphere;
  int n = 0;
  std::string alg;  // Adjoint only

  int m() const;      // dim of the isotropy representation
  int dim_k() const;  // dim K_i
  int d_ii() const;   // m(m-1)/2 - dim k
  Rational kappa() const { return Rational(dim_k(), m()); }
  bool grassmannian() const { return kind == Kind::SoGrassmann || kind == Kind::SpGrassmann; }
  bool sphere() const { return kind == Kind::Sphere; }
  std::string text() const;
  std::string display() const;

  static SymSpaceId parse(const std::string& s);  // ParseError / InvalidParameters
  bool operator==(const SymSpaceId&) const = default;
};

struct SpaceSpec {
  Family family = Family::Flag;
  std::map<std::string, long> params;
  std::string name;                // algebra or catalog name
  std::vector<SymSpaceId> factors;  // som, in the order given

  std::string text() const;  // canonical spec string
  bool operator==(const SpaceSpec&) const = default;
};

SpaceSpec parse_spec(const std::string& text);

struct KillingComponent {
  Rational c;
  int dim = 0;
  std::string label;
};

// Cas_chi on each summand, computed from the K-module structure of the summand
struct CasimirData {
  std::vector<Rational> per_summand;
  std::string source;
};

struct SpaceModel {
  SpaceSpec spec;
  std::string display;
  std::string algebra;
  int dim_g = 0;
  int dim_k = 0;
  lich::SummandSet summands;
  lich::StructuralConstants constants;
  bool has_constants = true;
  bool parametric = false;
  Rational rho;
  std::vector<KillingComponent> killing;
  std::optional<CasimirData> casimir;
  std::vector<std::string> notes;
  std::vector<std::string> errata;
};

SpaceModel build(const SpaceSpec& spec);
SpaceModel build_som(const std::vector<SymSpaceId>& ids);

// l1 Grassmannian factors first, then spheres, then the rest
std::vector<SymSpaceId> som_order(std::vector<SymSpaceId> ids);
bool som_eigenvector_check(const SpaceModel& model);

struct TwoSummandCurve {
  Rational a, b;
  bool operator==(const TwoSummandCurve&) const = default;
};

enum class TwoSummandRole { GlobalMax, DegenerateGlobalMax, LocalMin };
std::string role_name(TwoSummandRole r);

struct TwoSummandResult {
  TwoSummandCurve curve;
  int einstein_count = 1;
  TwoSummandRole role = TwoSummandRole::GlobalMax;
  bool operator==(const TwoSummandResult&) const = default;
};

TwoSummandResult two_summand_analysis(int d1, const Rational& c111, const Rational& c112);

// [112] unknown: a = d1 rho + t/4, b = t/4 with t = [112] in (0, upper]
struct TwoSummandThreshold {
  int d1 = 0;
  Rational rho;
  Rational threshold;  // a <= 9b  <=>  t >= threshold
  Rational upper;      // [111] >= 0  <=>  t <= upper
  std::string statement;
};

TwoSummandThreshold two_summand_threshold(int d1, const Rational& rho);

struct RhoRoute {
  std::string route;  // killing-ratios | structural-constants | casimir
  Rational value;
  bool operator==(const RhoRoute&) const = default;
};

struct Report {
  SpaceModel model;
  std::vector<RhoRoute> rho_routes;
  bool rho_agree = true;
  std::optional<exact::Spectrum> spectrum;
  std::optional<lich::StabilityVerdict> verdict;
  // kind when no spectrum is available (criteria, or the som coindex bound)
  std::optional<lich::Kind> bound_kind;
  std::optional<int> coindex_at_least;
  std::optional<criteria::CriterionResult> c1, c2;
  std::string c1_mark, c2_mark;
  std::optional<TwoSummandResult> two_summand;
  std::optional<TwoSummandThreshold> threshold;
  std::vector<std::string> notes;

  std::optional<lich::Kind> kind() const;
};

Report analyze(const SpaceSpec& spec);
Report analyze(const std::string& spec);

// mark for the table columns given the criteria result and the space's kind
std::string criteria_mark(const std::optional<criteria::CriterionResult>& r, std::optional<lich::Kind> kind);

}  // namespace einstab::spaces
