#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "einstab/criteria.hpp"
#include "einstab/expected.hpp"
#include "einstab/oracle.hpp"
#include "einstab/spaces.hpp"

namespace einstab::cli {

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& s);  // ParseError

inline constexpr int kSchemaVersion = 1;

// the serialized view of spaces::Report
struct SpectrumEntry {
  std::string value;
  int mult = 0;
  bool operator==(const SpectrumEntry&) const = default;
};

struct VerdictSummary {
  std::string kind;
  int coindex = 0;
  int nullity = 0;
  bool conclusive = true;
  bool nondegenerate = true;
  bool operator==(const VerdictSummary&) const = default;
};

struct CriterionSummary {
  std::string part;
  std::string conclusion;
  std::string mark;
  std::vector<std::string> thresholds;
  bool operator==(const CriterionSummary&) const = default;
};

struct RouteSummary {
  std::string route;
  std::string value;
  bool operator==(const RouteSummary&) const = default;
};

struct ReportSummary {
  int schema_version = kSchemaVersion;
  std::string spec;
  std::string display;
  std::string algebra;
  int dim_g = 0, dim_k = 0;
  std::vector<std::string> summands;  // "label:dim"
  std::string rho;
  std::vector<RouteSummary> rho_routes;
  bool rho_agree = true;
  std::optional<std::string> lambda_p, lambda_p_max;
  std::vector<SpectrumEntry> spectrum;
  std::optional<VerdictSummary> verdict;
  std::optional<std::string> bound_kind;
  std::optional<int> coindex_at_least;
  std::optional<CriterionSummary> c1, c2;
  std::optional<std::string> two_summand_role;
  std::optional<std::string> threshold;
  std::vector<std::string> errata;
  std::vector<std::string> notes;

  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(const spaces::Report& r);

void to_json(nlohmann::ordered_json& j, const ReportSummary& s);
void from_json(const nlohmann::ordered_json& j, ReportSummary& s);  // ParseError

std::string interval_text(const exact::Interval& x);
std::string spectrum_text(const std::vector<SpectrumEntry>& s);  // "0×1, 4/5×35"

std::string render_report(const spaces::Report& r, Format f);

struct TableSummary {
  int instances = 0, errata = 0, mismatches = 0, failures = 0;
  bool ok() const { return mismatches == 0 && failures == 0; }
};

TableSummary summarize_table(const std::vector<spaces::InstanceResult>& rows);
std::string render_table(spaces::TableId t, const std::vector<spaces::InstanceResult>& rows, Format f);

struct CriteriaQuery {
  std::string algebra;
  std::optional<int> dim_k;
  std::optional<exact::Rational> rho;
};

// "key=value" tokens: g, dim_k, rho; unknown keys are ParseError
CriteriaQuery parse_criteria_args(const std::vector<std::string>& tokens);
std::string render_criteria(const CriteriaQuery& q, Format f);  // UnknownLabel, InvalidParameters

std::string render_oracle(const std::vector<oracle::OracleReport>& reports, Format f);
std::string render_lambda_max(const oracle::LambdaMaxReport& r, Format f);

}  // namespace einstab::cli
