#include "einstab/killing.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "einstab/embedded.hpp"
#include "einstab/errors.hpp"

namespace einstab::killing {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const Params& p) : s_(s), p_(p) {}

  Rational run() {
    Rational v = sum();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  const Params& p_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    return i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(');
  }

  Rational sum() {
    Rational v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }
  Rational product() {
    Rational v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Rational d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_factor()) {
        v *= power();
      } else {
        return v;
      }
    }
  }
  Rational unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Rational power() {
    Rational b = atom();
    if (eat('^')) {
      Rational e = atom();
      if (!e.is_integer()) fail("non-integer exponent");
      return pow(b, static_cast<int>(e.num().get_si()));
    }
    return b;
  }
  Rational atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Rational v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Rational v(mpz_class(s_.substr(i_, j - i_)));
      i_ = j;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      std::string name(1, s_[i_++]);  // single-letter parameters so that "pq" is p*q
      auto it = p_.find(name);
      if (it == p_.end()) fail("unbound parameter '" + name + "'");
      return Rational(it->second);
    }
    fail(std::string("unexpected '") + s_[i_] + "'");
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational evaluate(const std::string& expr, const Params& params) { return ExprParser(expr, params).run(); }

std::string instantiate(const std::string& pattern, const Params& params) {
  auto open = pattern.find('(');
  if (open == std::string::npos || pattern.back() != ')') return pattern;
  std::string inner = pattern.substr(open + 1, pattern.size() - open - 2);
  bool has_param = false;
  for (char ch : inner)
    if (std::isalpha(static_cast<unsigned char>(ch))) has_param = true;
  if (!has_param) return pattern;
  Rational v = evaluate(inner, params);
  return pattern.substr(0, open + 1) + v.str() + ")";
}

Registry Registry::parse(const std::string& text, const std::string& source) {
  Registry reg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header) {
      if (t != "einstab-killing-ratios v1")
        throw RegistryError(source + ": unsupported header '" + t + "'");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(t);
    std::string cell;
    while (std::getline(ls, cell, '|')) f.push_back(trim(cell));
    if (f.size() != 5) throw RegistryError(source + ":" + std::to_string(lineno) + ": expected 5 fields");
    for (const auto& x : f)
      if (x.empty()) throw RegistryError(source + ":" + std::to_string(lineno) + ": empty field");
    reg.records_.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  if (!header) throw RegistryError(source + ": missing header");
  return reg;
}

const Registry& Registry::global() {
  static std::once_flag once;
  static Registry reg;
  std::call_once(once, [] {
    if (const char* path = std::getenv("EINSTAB_REGISTRY"); path && *path) {
      std::ifstream f(path);
      if (!f) throw RegistryError(std::string("cannot read ") + path);
      std::stringstream ss;
      ss << f.rdbuf();
      reg = parse(ss.str(), path);
    } else {
      reg = parse(embedded::killing_registry(), "<embedded>");
    }
  });
  return reg;
}

KillingRatio Registry::ratio(const std::string& sub, const std::string& ambient, const std::string& tag,
                             const Params& params) const {
  for (const auto& r : records_) {
    if (r.subalgebra != sub || r.ambient != ambient || r.tag != tag) continue;
    Rational c = evaluate(r.c_expr, params);
    if (c.sign() < 0 || c > Rational(1))
      throw OutOfRange("Killing ratio " + c.str() + " for " + sub + " in " + ambient + " outside [0, 1]");
    return {instantiate(sub, params), instantiate(ambient, params), tag, c, r.provenance};
  }
  throw UnknownLabel("no Killing ratio for " + sub + " in " + ambient + " [" + tag + "]");
}

Rational compose_ratio(const EmbeddingChain& chain) {
  if (chain.empty()) throw NonComposable("empty chain");
  Rational c(1);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (j + 1 < chain.size() && chain[j].subalgebra != chain[j + 1].ambient)
      throw NonComposable(chain[j].subalgebra + " is not the ambient of " + chain[j + 1].subalgebra + " in " +
                          chain[j + 1].ambient);
    c *= chain[j].c;
  }
  return c;
}

Rational einstein_constant(int d, const std::vector<std::pair<Rational, int>>& components) {
  if (d < 1) throw InvalidParameters("d must be positive");
  Rational s(0);
  for (const auto& [c, dim_k] : components) s += (Rational(1) - c) * Rational(dim_k);
  Rational rho = Rational(1, 4) + s / Rational(2 * d);
  if (rho < Rational(1, 4) || rho > Rational(1, 2))
    throw OutOfBracket("rho = " + rho.str() + " lies outside [1/4, 1/2]");
  return rho;
}

Rational rho_from_casimir(const Rational& a) {
  if (a.sign() < 0 || a > Rational(1, 2)) throw OutOfRange("Casimir constant outside [0, 1/2]");
  return Rational(1, 4) + a / Rational(2);
}

}  // namespace einstab::killing
