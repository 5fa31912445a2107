#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "einstab/rational.hpp"

namespace einstab::killing {

using exact::Rational;
using Params = std::map<std::string, long>;

// integer arithmetic expression with + - * / ^, parentheses and implicit products ("3n-1")
Rational evaluate(const std::string& expr, const Params& params);

struct KillingRatio {
  std::string subalgebra;
  std::string ambient;
  std::string embedding_tag;
  Rational c;
  std::string provenance;
};

using EmbeddingChain = std::vector<KillingRatio>;  // outermost link first

struct RegistryRecord {
  std::string subalgebra;  // may carry parameters, e.g. "sp(3n-1)"
  std::string ambient;
  std::string tag;
  std::string c_expr;
  std::string provenance;
};

class Registry {
 public:
  static Registry parse(const std::string& text, const std::string& source);
  // embedded copy, or the file named by EINSTAB_REGISTRY
  static const Registry& global();

  const std::vector<RegistryRecord>& records() const { return records_; }
  // lookup by the literal pattern names; parameters fill in c and the instantiated names
  KillingRatio ratio(const std::string& sub, const std::string& ambient, const std::string& tag,
                     const Params& params = {}) const;

 private:
  std::vector<RegistryRecord> records_;
};

// "sp(3n-1)" with n=2 -> "sp(5)"
std::string instantiate(const std::string& pattern, const Params& params);

Rational compose_ratio(const EmbeddingChain& chain);

// rho = 1/4 + (1/2d) sum (1 - c_i) dim k_i
Rational einstein_constant(int d, const std::vector<std::pair<Rational, int>>& components);

Rational rho_from_casimir(const Rational& a);

}  // namespace einstab::killing
