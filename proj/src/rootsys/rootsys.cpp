#include "einstab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "einstab/errors.hpp"

namespace einstab::rootsys {

namespace {

void validate(const RootSystemId& id) {
  if (id.family == Family::A && id.n < 2) throw OutOfRange("su(n) needs n >= 2");
  if (id.family == Family::D && id.n < 3) throw OutOfRange("so(2n) needs n >= 3");
}

int ambient_dim(const RootSystemId& id) {
  switch (id.family) {
    case Family::A: return id.n;
    case Family::D: return id.n;
    default: return 8;
  }
}

std::vector<RootVector> all_roots(const RootSystemId& id) {
  validate(id);
  int amb = ambient_dim(id);
  std::vector<RootVector> out;
  auto pm_pair = [&](int i, int j, int si, int sj) {
    RootVector v(amb);
    v[i] = si;
    v[j] = sj;
    out.push_back(v);
  };
  Rational half(1, 2);
  switch (id.family) {
    case Family::A:
      for (int i = 0; i < amb; ++i)
        for (int j = 0; j < amb; ++j)
          if (i != j) pm_pair(i, j, 1, -1);
      break;
    case Family::D:
      for (int i = 0; i < amb; ++i)
        for (int j = i + 1; j < amb; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) pm_pair(i, j, si, sj);
      break;
    case Family::E8:
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) pm_pair(i, j, si, sj);
      for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        RootVector v(8);
        for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -half : half;
        out.push_back(v);
      }
      break;
    case Family::E7:
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) pm_pair(i, j, si, sj);
      pm_pair(6, 7, 1, -1);
      pm_pair(6, 7, -1, 1);
      for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        for (int s : {1, -1}) {
          RootVector v(8);
          for (int i = 0; i < 6; ++i) v[i] = (mask >> i & 1) ? -half : half;
          v[6] = half * Rational(s);
          v[7] = -half * Rational(s);
          out.push_back(v);
        }
      }
      break;
    case Family::E6:
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) pm_pair(i, j, si, sj);
      for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        for (int s : {1, -1}) {
          RootVector v(8);
          for (int i = 0; i < 5; ++i) v[i] = (mask >> i & 1) ? -half : half;
          v[5] = -half;
          v[6] = -half;
          v[7] = half;
          for (auto& x : v) x *= Rational(s);
          out.push_back(v);
        }
      }
      break;
  }
  return out;
}

// generic functional with no root in its kernel: weights 3^i
bool is_positive(const RootVector& v) {
  Rational f(0), w(1);
  for (const auto& x : v) {
    f += x * w;
    w *= Rational(3);
  }
  return f.sign() > 0;
}

RootVector add(const RootVector& a, const RootVector& b, int sign) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + Rational(sign) * b[i];
  return out;
}

}  // namespace

RootSystemId RootSystemId::parse(const std::string& algebra) {
  static const std::regex pat(R"(^\s*(su|so|sp)\((\d+)\)\s*$)");
  std::smatch m;
  std::string a = algebra;
  if (a == "e6") return {Family::E6, 6};
  if (a == "e7") return {Family::E7, 7};
  if (a == "e8") return {Family::E8, 8};
  if (std::regex_match(a, m, pat)) {
    int k = std::stoi(m[2]);
    if (m[1] == "su") {
      RootSystemId id{Family::A, k};
      validate(id);
      return id;
    }
    if (m[1] == "so" && k % 2 == 0) {
      RootSystemId id{Family::D, k / 2};
      validate(id);
      return id;
    }
    throw UnsupportedType(a + " is not simply laced");
  }
  if (a == "f4" || a == "g2") throw UnsupportedType(a + " is not simply laced");
  throw UnsupportedType("unknown algebra '" + a + "'");
}

std::string RootSystemId::algebra() const {
  switch (family) {
    case Family::A: return "su(" + std::to_string(n) + ")";
    case Family::D: return "so(" + std::to_string(2 * n) + ")";
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    case Family::E8: return "e8";
  }
  return "?";
}

int RootSystemId::dim_g() const {
  switch (family) {
    case Family::A: return n * n - 1;
    case Family::D: return n * (2 * n - 1);
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

int RootSystemId::rank() const {
  switch (family) {
    case Family::A: return n - 1;
    case Family::D: return n;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
  }
  return 0;
}

std::vector<RootVector> enumerate_positive_roots(const RootSystemId& id) {
  std::vector<RootVector> out;
  for (auto& r : all_roots(id))
    if (is_positive(r)) out.push_back(std::move(r));
  return out;
}

std::vector<std::array<int, 3>> bracket_triples(const RootSystemId& id) {
  auto pos = enumerate_positive_roots(id);
  std::map<RootVector, int> index;
  for (std::size_t i = 0; i < pos.size(); ++i) index[pos[i]] = static_cast<int>(i);
  std::set<std::array<int, 3>> triples;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b)
      for (int s : {1, -1}) {
        RootVector c = add(pos[a], pos[b], s);
        if (!is_positive(c)) c = add(RootVector(c.size()), c, -1);
        auto it = index.find(c);
        if (it == index.end()) continue;
        std::array<int, 3> t{static_cast<int>(a), static_cast<int>(b), it->second};
        std::sort(t.begin(), t.end());
        triples.insert(t);
      }
  return {triples.begin(), triples.end()};
}

exact::SymRationalMatrix adjacency_matrix(const RootSystemId& id) {
  auto roots = all_roots(id);
  std::set<RootVector> delta(roots.begin(), roots.end());
  auto pos = enumerate_positive_roots(id);
  exact::SymRationalMatrix A(pos.size());
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (a == b) continue;
      bool adj = delta.count(add(pos[a], pos[b], 1)) || delta.count(add(pos[a], pos[b], -1));
      A(a, b) = adj ? 1 : 0;
    }
  return A;
}

namespace {

int kappa_of(const exact::SymRationalMatrix& A) {
  Rational row(0);
  for (std::size_t j = 0; j < A.order(); ++j) row += A(0, j);
  return static_cast<int>(row.num().get_si());
}

}  // namespace

Rational flag_b_constant(const RootSystemId& id) {
  int kappa = kappa_of(adjacency_matrix(id));
  if (kappa == 0) throw OutOfRange(id.algebra() + " has no bracket triples (kappa = 0)");
  Rational d(id.dim_g() - id.rank());
  return (Rational(2) - Rational(4 * id.rank()) / d) / Rational(kappa);
}

FlagData flag_data(const RootSystemId& id) {
  FlagData f;
  f.id = id;
  f.positive_roots = enumerate_positive_roots(id);
  f.adjacency = adjacency_matrix(id);
  f.kappa = kappa_of(f.adjacency);
  f.b = flag_b_constant(id);
  return f;
}

exact::Spectrum flag_spectrum(const RootSystemId& id) {
  FlagData f = flag_data(id);
  std::size_t r = f.adjacency.order();
  exact::SymRationalMatrix L(r);
  Rational half_b = f.b / Rational(2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      L(i, j) = half_b * ((i == j ? Rational(f.kappa) : Rational(0)) - f.adjacency(i, j));
  return exact::rational_spectrum(L);
}

Rational root_length_killing(const RootSystemId& id) {
  // Killing form on t is sum over roots of alpha (x) alpha = (|Delta| |alpha|^2 / rank) I
  auto roots = all_roots(id);
  Rational len2(0);
  for (const auto& x : roots.front()) len2 += x * x;
  Rational c = Rational(static_cast<long>(roots.size())) * len2 / Rational(id.rank());
  return len2 / c;
}

}  // namespace einstab::rootsys
