#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einstab/lich.hpp"
#include "einstab/spaces.hpp"

namespace einstab::spaces {

enum class TableId { IA, IAA, IB1, IB2, IB3 };

TableId parse_table_id(const std::string& s);  // ParseError
std::string table_name(TableId t);

struct ExpectedValue {
  Rational value;
  std::optional<int> mult;
};

// a printed value the computation replaces; field names match FieldCheck::field
struct Erratum {
  std::string field;
  std::string corrected;
  std::string note;
};

struct ExpectedInstance {
  std::string spec;    // empty for regression-only rows
  std::string params;  // e.g. "n=5"
  std::optional<Rational> rho;
  std::optional<ExpectedValue> lambda_p, lambda_mid, lambda_max;
  std::vector<lich::Kind> kinds;  // printed verdict, any of these
  bool open_case = false;         // no verdict printed, none may be computed
  std::optional<int> coindex, nullity;
  std::string c1, c2;  // printed marks, empty when not printed
  std::string role;    // two-summand role, e.g. "global-max"
  std::vector<Erratum> errata;
  std::vector<std::string> notes;
  // regression-only rows feed the criteria directly
  std::string algebra;
  int dim_g = 0, dim_k = 0;
};

struct ExpectedRow {
  TableId table = TableId::IA;
  std::string number;
  std::string space;
  std::string verdict_text;
  std::vector<ExpectedInstance> instances;
};

std::vector<ExpectedRow> expected_table(TableId t);

struct FieldCheck {
  enum class Status { Match, Erratum, Mismatch };
  std::string field;
  std::string printed;
  std::string computed;
  Status status = Status::Match;
  std::string note;
};

std::string status_name(FieldCheck::Status s);

// report is ignored (may be null) for regression-only instances
std::vector<FieldCheck> compare(const ExpectedInstance& inst, const Report* report);

struct InstanceResult {
  std::string row;
  std::string space;
  ExpectedInstance instance;
  std::optional<Report> report;
  std::vector<FieldCheck> checks;
  std::string error;  // generator failure

  bool ok() const;
  bool has_erratum() const;
};

// regenerates every instance of the table (rows in parallel, output order fixed)
std::vector<InstanceResult> run_table(TableId t);

}  // namespace einstab::spaces
