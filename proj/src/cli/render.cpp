#include "einstab/render.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <sstream>

#include "einstab/errors.hpp"

namespace einstab::cli {

using nlohmann::ordered_json;
using exact::Rational;
using spaces::FieldCheck;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw ParseError("unknown format '" + s + "' (json, csv, markdown)");
}

std::string interval_text(const exact::Interval& x) {
  if (x.exact()) return x.lo.str();
  return "[" + x.lo.str() + ", " + x.hi.str() + "]";
}

std::string spectrum_text(const std::vector<SpectrumEntry>& s) {
  std::string out;
  for (const auto& e : s) {
    if (!out.empty()) out += ", ";
    out += e.value + "×" + std::to_string(e.mult);
  }
  return out;
}

namespace {

CriterionSummary criterion_summary(const criteria::CriterionResult& c, const std::string& mark) {
  return {criteria::part_name(c.applied), c.conclusion, mark, {c.thresholds.first.str(), c.thresholds.second.str()}};
}

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
  return out + "\n";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string md_line(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_cell(c) + " |";
  return out + "\n";
}

std::string md_header(const std::vector<std::string>& cells) {
  std::string out = md_line(cells) + "|";
  for (std::size_t i = 0; i < cells.size(); ++i) out += "---|";
  return out + "\n";
}

template <class T>
void put_opt(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <class T>
void get_opt(const ordered_json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) v = j.at(key).get<T>();
  else v.reset();
}

ordered_json criterion_json(const std::optional<CriterionSummary>& c) {
  if (!c) return nullptr;
  return {{"part", c->part}, {"conclusion", c->conclusion}, {"mark", c->mark}, {"thresholds", c->thresholds}};
}

std::optional<CriterionSummary> criterion_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return CriterionSummary{j.at("part"), j.at("conclusion"), j.at("mark"), j.at("thresholds")};
}

}  // namespace

ReportSummary summarize(const spaces::Report& r) {
  const auto& M = r.model;
  ReportSummary s;
  s.spec = M.spec.text();
  s.display = M.display;
  s.algebra = M.algebra;
  s.dim_g = M.dim_g;
  s.dim_k = M.dim_k;
  for (std::size_t i = 0; i < M.summands.size(); ++i)
    s.summands.push_back(M.summands.labels[i] + ":" + std::to_string(M.summands.dims[i]));
  s.rho = M.rho.str();
  for (const auto& x : r.rho_routes) s.rho_routes.push_back({x.route, x.value.str()});
  s.rho_agree = r.rho_agree;
  if (r.spectrum)
    for (const auto& [v, m] : r.spectrum->pairs) s.spectrum.push_back({v.str(), m});
  if (r.verdict) {
    const auto& v = *r.verdict;
    s.lambda_p = interval_text(v.lambda_p);
    s.lambda_p_max = interval_text(v.lambda_p_max);
    s.verdict = VerdictSummary{lich::kind_name(v.kind), v.coindex, v.nullity, v.conclusive, v.g_nondegenerate};
  }
  if (r.bound_kind) s.bound_kind = lich::kind_name(*r.bound_kind);
  s.coindex_at_least = r.coindex_at_least;
  if (r.c1) s.c1 = criterion_summary(*r.c1, r.c1_mark);
  if (r.c2) s.c2 = criterion_summary(*r.c2, r.c2_mark);
  if (r.two_summand) s.two_summand_role = spaces::role_name(r.two_summand->role);
  if (r.threshold) s.threshold = r.threshold->statement;
  s.errata = M.errata;
  s.notes = M.notes;
  s.notes.insert(s.notes.end(), r.notes.begin(), r.notes.end());
  return s;
}

void to_json(ordered_json& j, const ReportSummary& s) {
  j = ordered_json::object();
  j["schema_version"] = s.schema_version;
  j["spec"] = s.spec;
  j["display"] = s.display;
  j["algebra"] = s.algebra;
  j["dim_g"] = s.dim_g;
  j["dim_k"] = s.dim_k;
  j["summands"] = s.summands;
  j["rho"] = s.rho;
  ordered_json routes = ordered_json::array();
  for (const auto& x : s.rho_routes) routes.push_back({{"route", x.route}, {"value", x.value}});
  j["rho_routes"] = routes;
  j["rho_agree"] = s.rho_agree;
  put_opt(j, "lambda_p", s.lambda_p);
  put_opt(j, "lambda_p_max", s.lambda_p_max);
  ordered_json spec = ordered_json::array();
  for (const auto& e : s.spectrum) spec.push_back({{"value", e.value}, {"mult", e.mult}});
  j["spectrum"] = spec;
  if (s.verdict)
    j["verdict"] = {{"kind", s.verdict->kind},
                    {"coindex", s.verdict->coindex},
                    {"nullity", s.verdict->nullity},
                    {"conclusive", s.verdict->conclusive},
                    {"nondegenerate", s.verdict->nondegenerate}};
  else
    j["verdict"] = nullptr;
  put_opt(j, "bound_kind", s.bound_kind);
  put_opt(j, "coindex_at_least", s.coindex_at_least);
  j["criteria"] = {{"c1", criterion_json(s.c1)}, {"c2", criterion_json(s.c2)}};
  put_opt(j, "two_summand_role", s.two_summand_role);
  put_opt(j, "threshold", s.threshold);
  j["errata"] = s.errata;
  j["notes"] = s.notes;
}

void from_json(const ordered_json& j, ReportSummary& s) {
  try {
    s = ReportSummary{};
    s.schema_version = j.at("schema_version");
    if (s.schema_version != kSchemaVersion)
      throw ParseError("schema_version " + std::to_string(s.schema_version) + " is not supported");
    s.spec = j.at("spec");
    s.display = j.at("display");
    s.algebra = j.at("algebra");
    s.dim_g = j.at("dim_g");
    s.dim_k = j.at("dim_k");
    s.summands = j.at("summands").get<std::vector<std::string>>();
    s.rho = j.at("rho");
    for (const auto& x : j.at("rho_routes")) s.rho_routes.push_back({x.at("route"), x.at("value")});
    s.rho_agree = j.at("rho_agree");
    get_opt(j, "lambda_p", s.lambda_p);
    get_opt(j, "lambda_p_max", s.lambda_p_max);
    for (const auto& e : j.at("spectrum")) s.spectrum.push_back({e.at("value"), e.at("mult")});
    if (const auto& v = j.at("verdict"); !v.is_null())
      s.verdict = VerdictSummary{v.at("kind"), v.at("coindex"), v.at("nullity"), v.at("conclusive"), v.at("nondegenerate")};
    get_opt(j, "bound_kind", s.bound_kind);
    get_opt(j, "coindex_at_least", s.coindex_at_least);
    s.c1 = criterion_from(j.at("criteria").at("c1"));
    s.c2 = criterion_from(j.at("criteria").at("c2"));
    get_opt(j, "two_summand_role", s.two_summand_role);
    get_opt(j, "threshold", s.threshold);
    s.errata = j.at("errata").get<std::vector<std::string>>();
    s.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

namespace {

std::vector<std::pair<std::string, std::string>> report_fields(const ReportSummary& s) {
  std::vector<std::pair<std::string, std::string>> f;
  auto opt = [](const std::optional<std::string>& x) { return x ? *x : std::string("-"); };
  f.emplace_back("space", s.display);
  f.emplace_back("spec", s.spec);
  f.emplace_back("algebra", s.algebra);
  f.emplace_back("dim g", std::to_string(s.dim_g));
  f.emplace_back("dim k", std::to_string(s.dim_k));
  std::string sm;
  for (const auto& x : s.summands) sm += (sm.empty() ? "" : " ") + x;
  f.emplace_back("summands", sm);
  f.emplace_back("rho", s.rho);
  std::string routes;
  for (const auto& x : s.rho_routes) routes += (routes.empty() ? "" : "; ") + x.route + " " + x.value;
  f.emplace_back("rho routes", routes + (s.rho_agree ? "" : " (disagree)"));
  f.emplace_back("spectrum", s.spectrum.empty() ? "-" : spectrum_text(s.spectrum));
  f.emplace_back("lambda_p", opt(s.lambda_p));
  f.emplace_back("lambda_p_max", opt(s.lambda_p_max));
  if (s.verdict) {
    f.emplace_back("verdict", s.verdict->kind + (s.verdict->conclusive ? "" : " (inconclusive)"));
    f.emplace_back("coindex", std::to_string(s.verdict->coindex));
    f.emplace_back("nullity", std::to_string(s.verdict->nullity));
    f.emplace_back("nondegenerate", s.verdict->nondegenerate ? "yes" : "no");
  } else {
    f.emplace_back("verdict", s.bound_kind ? *s.bound_kind + " (bound)" : "-");
    if (s.coindex_at_least) f.emplace_back("coindex", ">= " + std::to_string(*s.coindex_at_least));
  }
  for (auto [name, c] : {std::pair{"C1", &s.c1}, std::pair{"C2", &s.c2}})
    f.emplace_back(name, *c ? (*c)->mark + " (" + (*c)->part + (((*c)->conclusion.empty()) ? "" : ": " + (*c)->conclusion) +
                                  ")"
                            : "-");
  if (s.two_summand_role) f.emplace_back("role", *s.two_summand_role);
  if (s.threshold) f.emplace_back("threshold", *s.threshold);
  for (const auto& e : s.errata) f.emplace_back("erratum", e);
  for (const auto& n : s.notes) f.emplace_back("note", n);
  return f;
}

}  // namespace

std::string render_report(const spaces::Report& r, Format f) {
  auto s = summarize(r);
  if (f == Format::Json) {
    ordered_json j = s;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (f == Format::Csv) {
    out = csv_line({"field", "value"});
    for (const auto& [k, v] : report_fields(s)) out += csv_line({k, v});
    return out;
  }
  out = "## " + s.display + "\n\n" + md_header({"field", "value"});
  for (const auto& [k, v] : report_fields(s)) out += md_line({k, v});
  return out;
}

TableSummary summarize_table(const std::vector<spaces::InstanceResult>& rows) {
  TableSummary t;
  for (const auto& r : rows) {
    ++t.instances;
    if (!r.error.empty()) ++t.failures;
    for (const auto& c : r.checks) {
      t.errata += c.status == FieldCheck::Status::Erratum;
      t.mismatches += c.status == FieldCheck::Status::Mismatch;
    }
  }
  return t;
}

namespace {

std::string status_text(const FieldCheck& c) {
  if (c.status == FieldCheck::Status::Erratum) return "erratum-adjusted (" + c.field + ")";
  return spaces::status_name(c.status);
}

std::string instance_name(const spaces::InstanceResult& r) {
  std::string s = r.instance.spec.empty() ? r.instance.algebra : r.instance.spec;
  if (!r.instance.params.empty()) s += " [" + r.instance.params + "]";
  return s;
}

}  // namespace

std::string render_table(spaces::TableId t, const std::vector<spaces::InstanceResult>& rows, Format f) {
  auto sum = summarize_table(rows);
  std::string name = spaces::table_name(t);
  if (f == Format::Json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["table"] = name;
    ordered_json inst = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"field", c.field},
                          {"printed", c.printed},
                          {"computed", c.computed},
                          {"status", spaces::status_name(c.status)},
                          {"note", c.note}});
      inst.push_back({{"row", r.row},
                      {"space", r.space},
                      {"spec", r.instance.spec},
                      {"params", r.instance.params},
                      {"ok", r.ok()},
                      {"erratum", r.has_erratum()},
                      {"error", r.error},
                      {"checks", checks}});
    }
    j["instances"] = inst;
    j["summary"] = {{"instances", sum.instances},
                    {"errata", sum.errata},
                    {"mismatches", sum.mismatches},
                    {"failures", sum.failures},
                    {"ok", sum.ok()}};
    return j.dump(2) + "\n";
  }
  std::vector<std::string> head = {"row", "instance", "field", "printed", "computed", "status", "note"};
  std::string out = f == Format::Csv ? csv_line(head) : "## Table " + name + "\n\n" + md_header(head);
  auto line = [&](const std::vector<std::string>& c) { out += f == Format::Csv ? csv_line(c) : md_line(c); };
  for (const auto& r : rows) {
    if (!r.error.empty()) line({r.row, instance_name(r), "-", "-", "-", "generator-error", r.error});
    for (const auto& c : r.checks) line({r.row, instance_name(r), c.field, c.printed, c.computed, status_text(c), c.note});
  }
  std::string tail = std::to_string(sum.instances) + " instances, " + std::to_string(sum.errata) + " errata, " +
                     std::to_string(sum.mismatches) + " mismatches, " + std::to_string(sum.failures) + " failures";
  if (f == Format::Markdown) out += "\n" + tail + (sum.ok() ? "\n" : " (MISMATCH)\n");
  return out;
}

CriteriaQuery parse_criteria_args(const std::vector<std::string>& tokens) {
  CriteriaQuery q;
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      if (!q.algebra.empty()) throw ParseError("criteria: second algebra '" + t + "'");
      q.algebra = t;
      continue;
    }
    std::string key = t.substr(0, eq), value = t.substr(eq + 1);
    if (key == "g") {
      q.algebra = value;
    } else if (key == "dim_k") {
      try {
        std::size_t used = 0;
        q.dim_k = std::stoi(value, &used);
        if (used != value.size() || *q.dim_k < 0) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("criteria: dim_k must be a nonnegative integer, got '" + value + "'");
      }
    } else if (key == "rho") {
      q.rho = exact::Rational::parse(value);
    } else {
      throw ParseError("criteria: unknown key '" + key + "' (g, dim_k, rho)");
    }
  }
  if (q.algebra.empty()) throw ParseError("criteria: no algebra given");
  return q;
}

std::string render_criteria(const CriteriaQuery& q, Format f) {
  auto row = criteria::casimir_row(q.algebra);
  auto th = criteria::structural_thresholds(row);
  std::optional<criteria::CriterionResult> c2, c1;
  if (q.dim_k) c2 = criteria::criterion_structural(row.dim_g, *q.dim_k, row);
  if (q.rho) c1 = criteria::criterion_einstein(*q.rho, row);

  auto fired = [](const criteria::CriterionResult& r, const std::string& lhs, const std::string& rhs) {
    if (r.applied == criteria::Part::None) return std::string("no part fires");
    return criteria::part_name(r.applied) + " fires: " + lhs + " " + rhs + " → " + r.conclusion;
  };
  std::string c2_text, c1_text, boundary;
  if (c2) {
    Rational k(*q.dim_k);
    std::string rel = k < th.first ? "< " + th.first.str()
                      : k == th.first ? "= " + th.first.str()
                      : k > th.second ? "> " + th.second.str()
                                      : "= " + th.second.str();
    c2_text = fired(*c2, std::to_string(*q.dim_k), rel);
    if (k == th.first && k == th.second) boundary = "sc2-ii and sc2-iv both boundary; first match reported";
  }
  if (c1) {
    Rational e = Rational(8) * *q.rho - Rational(1);
    auto lt = row.lambda_tau, lmax = row.effective_max();
    std::string rel = e < lt ? "< " + lt.str() : e == lt ? "= " + lt.str() : lmax < e ? "> " + lmax.str() : "= " + lmax.str();
    c1_text = fired(*c1, "8 rho - 1 = " + e.str(), rel);
  }

  if (f == Format::Json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["algebra"] = row.algebra;
    j["dim_g"] = row.dim_g;
    j["lambda_tau"] = row.lambda_tau.str();
    j["lambda_tau_mid"] = row.lambda_tau_mid ? ordered_json(row.lambda_tau_mid->str()) : ordered_json(nullptr);
    j["lambda_tau_max"] = row.effective_max().str();
    j["thresholds"] = {th.first.str(), th.second.str()};
    auto one = [](const std::optional<criteria::CriterionResult>& r, const std::string& text) -> ordered_json {
      if (!r) return nullptr;
      ordered_json x = {{"part", criteria::part_name(r->applied)}, {"conclusion", r->conclusion}, {"text", text}};
      if (r->bound_interval) x["bound_interval"] = {r->bound_interval->first.str(), r->bound_interval->second.str()};
      return x;
    };
    j["c2"] = one(c2, c2_text);
    j["c1"] = one(c1, c1_text);
    j["notes"] = boundary.empty() ? ordered_json::array() : ordered_json::array({boundary});
    return j.dump(2) + "\n";
  }
  std::vector<std::pair<std::string, std::string>> fields = {
      {"algebra", row.algebra},
      {"dim g", std::to_string(row.dim_g)},
      {"lambda_tau", row.lambda_tau.str()},
      {"lambda_tau_mid", row.lambda_tau_mid ? row.lambda_tau_mid->str() : "-"},
      {"lambda_tau_max", row.effective_max().str()},
      {"thresholds", th.first.str() + " and " + th.second.str()}};
  if (c2) fields.emplace_back("dim_k", c2_text);
  if (c1) {
    fields.emplace_back("rho", c1_text);
    if (c1->bound_interval)
      fields.emplace_back("bounds", "[" + c1->bound_interval->first.str() + ", " + c1->bound_interval->second.str() + "]");
  }
  if (!boundary.empty()) fields.emplace_back("note", boundary);
  std::string out = f == Format::Csv ? csv_line({"field", "value"}) : md_header({"field", "value"});
  for (const auto& [k, v] : fields) out += f == Format::Csv ? csv_line({k, v}) : md_line({k, v});
  return out;
}

namespace {

ordered_json oracle_json(const oracle::OracleReport& r) {
  ordered_json j;
  j["target"] = r.target;
  j["m"] = r.m;
  j["dim_k"] = r.dim_k;
  ordered_json sm = ordered_json::array();
  for (std::size_t i = 0; i < r.labels.size(); ++i) sm.push_back({{"label", r.labels[i]}, {"dim", r.dims[i]}});
  j["summands"] = sm;
  j["orthonormality"] = sci(r.orthonormality);
  j["closure"] = sci(r.closure);
  ordered_json cs = ordered_json::array();
  for (const auto& c : r.constants)
    cs.push_back({{"label", c.label},
                  {"value", num(c.brute)},
                  {"reconstructed", c.reconstructed.str()},
                  {"exact", c.exact ? ordered_json(c.exact->str()) : ordered_json(nullptr)},
                  {"rel_error", sci(c.rel_error)},
                  {"pass", c.pass}});
  j["constants"] = cs;
  ordered_json ids = ordered_json::array();
  for (const auto& c : r.casimir.checks) ids.push_back({{"name", c.name}, {"error", sci(c.error)}, {"pass", c.pass}});
  j["identities"] = ids;
  ordered_json ric = ordered_json::array();
  for (double x : r.casimir.ricci) ric.push_back(num(x));
  j["ricci"] = ric;
  j["einstein"] = r.casimir.einstein;
  j["einstein_exact"] = r.einstein_exact ? ordered_json(*r.einstein_exact) : ordered_json(nullptr);
  ordered_json sp = ordered_json::array(), ex = ordered_json::array();
  for (double x : r.spectrum) sp.push_back(num(x));
  for (double x : r.exact_spectrum) ex.push_back(num(x));
  j["spectrum"] = sp;
  j["exact_spectrum"] = ex;
  j["spectrum_error"] = sci(r.spectrum_error);
  j["notes"] = r.notes;
  j["pass"] = r.pass();
  return j;
}

}  // namespace

std::string render_oracle(const std::vector<oracle::OracleReport>& reports, Format f) {
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  if (f == Format::Json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    ordered_json ts = ordered_json::array();
    for (const auto& r : reports) ts.push_back(oracle_json(r));
    j["targets"] = ts;
    j["pass"] = all;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> head = {"target", "item", "value", "expected", "error", "pass"};
  std::string out = f == Format::Csv ? csv_line(head) : md_header(head);
  auto line = [&](const std::vector<std::string>& c) { out += f == Format::Csv ? csv_line(c) : md_line(c); };
  auto yn = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
  for (const auto& r : reports) {
    line({r.target, "orthonormality", sci(r.orthonormality), "0", sci(r.orthonormality), yn(r.orthonormality <= 1e-12)});
    for (const auto& c : r.constants) {
      if (c.brute < 1e-12 && (!c.exact || c.exact->is_zero())) continue;
      line({r.target, c.label, num(c.brute) + " ≈ " + c.reconstructed.str(), c.exact ? c.exact->str() : "-",
            sci(c.rel_error), yn(c.pass)});
    }
    for (const auto& c : r.casimir.checks) line({r.target, c.name, "", "0", sci(c.error), yn(c.pass)});
    std::string sp, ex;
    for (double x : r.spectrum) sp += (sp.empty() ? "" : " ") + num(x);
    for (double x : r.exact_spectrum) ex += (ex.empty() ? "" : " ") + num(x);
    line({r.target, "spectrum", sp, ex.empty() ? "-" : ex, sci(r.spectrum_error),
          yn(r.exact_spectrum.empty() || r.spectrum_error <= 1e-8)});
    std::string ein = r.casimir.einstein ? "Einstein" : "not Einstein";
    std::string want = r.einstein_exact ? (*r.einstein_exact ? "Einstein" : "not Einstein") : "-";
    line({r.target, "einstein", ein, want, "", yn(!r.einstein_exact || *r.einstein_exact == r.casimir.einstein)});
    line({r.target, "overall", "", "", "", yn(r.pass())});
  }
  if (f == Format::Markdown) out += "\n" + std::string(all ? "all targets pass" : "FAILURES") + "\n";
  return out;
}

std::string render_lambda_max(const oracle::LambdaMaxReport& r, Format f) {
  if (f == Format::Json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["target"] = "som:adjoint(su(3))x2";
    ordered_json sp = ordered_json::array();
    for (double x : r.spectrum) sp.push_back(num(x));
    j["spectrum"] = sp;
    j["lambda_p"] = num(r.lambda_p);
    j["lambda_max"] = num(r.lambda_max);
    j["eigenvector_formula"] = r.eigenvector_formula.str();
    j["table_formula"] = r.table_formula.str();
    j["eigenvector_matches"] = r.eigenvector_matches;
    j["table_matches"] = r.table_matches;
    j["conclusion"] = r.conclusion;
    return j.dump(2) + "\n";
  }
  std::string sp;
  for (double x : r.spectrum) sp += (sp.empty() ? "" : " ") + num(x);
  std::vector<std::pair<std::string, std::string>> fields = {
      {"target", "som:adjoint(su(3))x2"},
      {"spectrum", sp},
      {"lambda_p", num(r.lambda_p)},
      {"lambda_max", num(r.lambda_max)},
      {"eigenvector formula", r.eigenvector_formula.str() + (r.eigenvector_matches ? " (matches)" : "")},
      {"printed closed form", r.table_formula.str() + (r.table_matches ? " (matches)" : "")},
      {"conclusion", r.conclusion}};
  std::string out = f == Format::Csv ? csv_line({"field", "value"}) : md_header({"field", "value"});
  for (const auto& [k, v] : fields) out += f == Format::Csv ? csv_line({k, v}) : md_line({k, v});
  return out;
}

}  // namespace einstab::cli
