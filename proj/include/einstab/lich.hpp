#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "einstab/matrix.hpp"
#include "einstab/spectrum.hpp"

namespace einstab::lich {

using exact::Rational;

struct SummandSet {
  std::vector<std::string> labels;
  std::vector<int> dims;
  bool multiplicity_free = true;

  SummandSet() = default;
  SummandSet(std::vector<std::string> labels, std::vector<int> dims, bool multiplicity_free = true);

  std::size_t size() const { return labels.size(); }
  std::size_t index(const std::string& label) const;  // UnknownLabel
  int total_dim() const;
};

// [ijk] keyed by the sorted label triple; absent triples are zero.
class StructuralConstants {
 public:
  using Key = std::array<std::string, 3>;

  void set(const std::string& a, const std::string& b, const std::string& c, const Rational& v);
  Rational get(const std::string& a, const std::string& b, const std::string& c) const;
  const std::map<Key, Rational>& table() const { return table_; }
  bool operator==(const StructuralConstants&) const = default;

  static Key key(std::string a, std::string b, std::string c);

 private:
  std::map<Key, Rational> table_;
};

// index-based view: for each summand k, the sums used by the matrix and Ricci formulas
struct IndexedConstants {
  std::size_t r = 0;
  // sum over (i, j) of [ijk], all ordered pairs
  std::vector<Rational> full_sum;
  // pair_sum[k][m] = sum_i [ikm]
  std::vector<std::vector<Rational>> pair_sum;
};

IndexedConstants index_constants(const SummandSet& s, const StructuralConstants& sc);

exact::SymRationalMatrix assemble_lich_matrix(const SummandSet& s, const StructuralConstants& sc);
std::vector<Rational> ricci_eigenvalues(const SummandSet& s, const StructuralConstants& sc);
bool casimir_consistency(const SummandSet& s, const StructuralConstants& sc, const std::vector<Rational>& a);

enum class Kind { Stable, SemistableBoundary, NeutrallyStable, UnstableLocalMin, UnstableSaddle };

std::string kind_name(Kind k);  // "G-stable", ...
Kind kind_from_name(const std::string& name);
bool is_unstable(Kind k);

struct StabilityVerdict {
  Rational two_rho;
  exact::Interval lambda_p;
  exact::Interval lambda_p_max;
  Kind kind = Kind::Stable;
  int coindex = 0;
  int nullity = 0;
  bool g_nondegenerate = true;
  bool conclusive = true;
  std::set<std::string> implied;
  exact::Spectrum tt_rational;  // TT eigenvalues, when all rational

  bool operator==(const StabilityVerdict&) const = default;
};

StabilityVerdict classify(const Rational& rho, const SummandSet& s, const exact::Spectrum& spec);
StabilityVerdict classify(const Rational& rho, const SummandSet& s, exact::FullSpectrum spec);

}  // namespace einstab::lich
