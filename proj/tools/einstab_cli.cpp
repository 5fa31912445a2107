#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "einstab/embedded.hpp"
#include "einstab/errors.hpp"
#include "einstab/expected.hpp"
#include "einstab/oracle.hpp"
#include "einstab/render.hpp"
#include "einstab/spaces.hpp"

using namespace einstab;

namespace {

enum Exit { kOk = 0, kParse = 2, kGenerator = 3, kTableMismatch = 4, kOracle = 5 };

bool is_parse_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownLabel*>(&e) ||
         dynamic_cast<const UnsupportedType*>(&e);
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "einstab: cannot write '" << out << "'\n";
    return kGenerator;
  }
  f << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of standard Einstein metrics on G/K"};
  app.require_subcommand(1);
  std::string format = "markdown", out;
  app.add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  app.add_option("--out", out, "write the output to a file");
  app.fallthrough();
  app.footer("EINSTAB_REGISTRY overrides the Killing-ratio data file.\nExit codes: 2 parse, 3 generator, 4 table mismatch, 5 oracle.");

  auto* analyze = app.add_subcommand("analyze", "analyze one space");
  std::string spec;
  analyze->add_option("space", spec, "space spec, e.g. flag:e7, som:sphere(3)x3, grassmann-square:n=4")->required();
  analyze->footer(std::string("Spec grammar:\n") + embedded::spec_grammar());

  auto* table = app.add_subcommand("table", "regenerate a table and diff it against the printed rows");
  std::string which;
  table->add_option("which", which, "IA, IAA, IB1, IB2, IB3")->required();

  auto* crit = app.add_subcommand("criteria", "dimension and Einstein-constant criteria");
  std::vector<std::string> crit_args;
  std::optional<int> dim_k;
  std::string rho;
  crit->add_option("args", crit_args, "algebra, then dim_k=N and/or rho=p/q")->required();
  crit->add_option("--dim-k", dim_k, "dim k");
  crit->add_option("--rho", rho, "Einstein constant");

  auto* orc = app.add_subcommand("oracle", "floating-point structure-constant oracle");
  std::string target;
  orc->add_option("target", target, "all, resolve-lambda-max, or a target such as som:sphere(3)x3, grassmann:n=3, "
                                    "flag:so(8), symmetric:so(9)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  cli::Format fmt = cli::parse_format(format);
  try {
    if (*analyze) {
      spaces::SpaceSpec parsed;
      try {
        parsed = spaces::parse_spec(spec);
      } catch (const Error& e) {
        std::cerr << "einstab: " << e.what() << "\n";
        return kParse;
      }
      auto report = spaces::analyze(parsed);
      return emit(cli::render_report(report, fmt), out);
    }
    if (*table) {
      auto t = spaces::parse_table_id(which);
      auto rows = spaces::run_table(t);
      int rc = emit(cli::render_table(t, rows, fmt), out);
      if (rc) return rc;
      auto sum = cli::summarize_table(rows);
      if (!sum.ok()) {
        std::cerr << "einstab: table " << spaces::table_name(t) << ": " << sum.mismatches << " mismatches, "
                  << sum.failures << " generator failures\n";
        return kTableMismatch;
      }
      return kOk;
    }
    if (*crit) {
      auto q = cli::parse_criteria_args(crit_args);
      if (dim_k) q.dim_k = *dim_k;
      if (!rho.empty()) q.rho = exact::Rational::parse(rho);
      try {
        return emit(cli::render_criteria(q, fmt), out);
      } catch (const OutOfRange& e) {
        std::cerr << "einstab: " << e.what() << "\n";
        return kParse;
      }
    }
    if (*orc) {
      if (target == "resolve-lambda-max") {
        auto r = oracle::resolve_som_lambda_max();
        int rc = emit(cli::render_lambda_max(r, fmt), out);
        return rc ? rc : (r.eigenvector_matches || r.table_matches ? kOk : kOracle);
      }
      std::vector<oracle::OracleReport> reports;
      if (target == "all")
        for (const auto& t : oracle::oracle_targets()) reports.push_back(oracle::run_oracle(t));
      else
        reports.push_back(oracle::run_oracle(target));
      int rc = emit(cli::render_oracle(reports, fmt), out);
      if (rc) return rc;
      for (const auto& r : reports)
        if (!r.pass()) return kOracle;
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "einstab: " << e.what() << "\n";
    return is_parse_error(e) ? kParse : kGenerator;
  } catch (const std::exception& e) {
    std::cerr << "einstab: " << e.what() << "\n";
    return kGenerator;
  }
  return kOk;
}
