#include <algorithm>
#include <regex>

#include "einstab/errors.hpp"
#include "einstab/spaces.hpp"

namespace einstab::spaces {

namespace {

const std::map<std::string, Family> kBare = {
    {"so26", Family::So26},           {"so8-g2", Family::So8G2},         {"e6-su2-so6", Family::E6Su2So6},
    {"e8-spin9", Family::E8Spin9},    {"e8-su5su5", Family::E8Su5Su5},   {"e8-su3x4", Family::E8Su3x4},
    {"e7-su2x7", Family::E7Su2x7},    {"e8-su2x8", Family::E8Su2x8},     {"e6-so3x3", Family::CriteriaOnly},
    {"e8-so5", Family::CriteriaOnly}, {"e8-so9", Family::CriteriaOnly},  {"e8-so3x4", Family::CriteriaOnly},
    {"e8-so5x2", Family::CriteriaOnly}, {"e8-su3x2", Family::CriteriaOnly},
};

const std::map<std::string, std::pair<Family, std::vector<std::string>>> kKeyed = {
    {"grassmann-square", {Family::GrassmannSquare, {"n"}}},
    {"grassmann-square-sp", {Family::GrassmannSquareSp, {"n"}}},
    {"su-triple", {Family::SuTriple, {"p", "q"}}},
    {"sp-chain", {Family::SpChain, {"n"}}},
    {"so-chain", {Family::SoChain, {"n"}}},
};

const std::vector<std::string> kGwsNames = {"f4-spin8", "e6-spin8", "e7-so8", "e7-spin8-3su2", "e8-spin8x2"};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<SymSpaceId> parse_factors(const std::string& args) {
  if (args.empty()) throw ParseError("som: no factors");
  std::vector<SymSpaceId> out;
  static const std::regex counted(R"((.*[a-z0-9)])x([0-9]+))");
  for (const auto& part : split(args, '+')) {
    if (part.empty()) throw ParseError("som: empty factor");
    std::string sym = part;
    long count = 1;
    std::smatch m;
    // "e8-spin16" ends in a digit but has no count; only a trailing "x<digits>" after ')' or a name counts
    if (std::regex_match(part, m, counted)) {
      std::string head = m[1];
      bool known_head = head.back() == ')';
      if (!known_head) {
        try {
          SymSpaceId::parse(head);
          known_head = true;
        } catch (const ParseError&) {
        }
      }
      if (known_head) {
        sym = head;
        count = std::stol(m[2]);
        if (count < 1) throw ParseError("som: factor count must be positive");
      }
    }
    auto id = SymSpaceId::parse(sym);
    for (long i = 0; i < count; ++i) out.push_back(id);
  }
  return out;
}

}  // namespace

std::string SpaceSpec::text() const {
  std::string f = family_name(family);
  switch (family) {
    case Family::Flag:
    case Family::Gws:
    case Family::GroupKilling: return f + ":" + name;
    case Family::CriteriaOnly: return name;
    case Family::Som: {
      std::string s = "som:";
      for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (i) s += "+";
        s += factors[i].text();
        if (j - i > 1) s += "x" + std::to_string(j - i);
        i = j;
      }
      return s;
    }
    default: break;
  }
  if (params.empty()) return f;
  std::string s = f + ":";
  bool first = true;
  for (const auto& [k, v] : params) {
    s += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  return s;
}

SpaceSpec parse_spec(const std::string& text) {
  SpaceSpec s;
  auto colon = text.find(':');
  std::string fam = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  bool has_args = colon != std::string::npos;

  if (auto it = kBare.find(fam); it != kBare.end()) {
    if (has_args) throw ParseError("'" + fam + "' takes no arguments");
    s.family = it->second;
    s.name = it->second == Family::CriteriaOnly ? fam : "";
    return s;
  }
  if (fam == "flag" || fam == "group-killing" || fam == "gws") {
    if (args.empty()) throw ParseError(fam + ": missing argument");
    s.family = fam == "flag" ? Family::Flag : (fam == "gws" ? Family::Gws : Family::GroupKilling);
    if (fam == "gws" && std::find(kGwsNames.begin(), kGwsNames.end(), args) == kGwsNames.end())
      throw ParseError("gws: unknown name '" + args + "'");
    static const std::regex alg(R"([a-z]+[0-9]*(\([0-9]+\))?)");
    if (fam != "gws" && !std::regex_match(args, alg)) throw ParseError(fam + ": malformed algebra '" + args + "'");
    s.name = args;
    return s;
  }
  if (fam == "som") {
    s.family = Family::Som;
    s.factors = parse_factors(args);
    return s;
  }
  auto it = kKeyed.find(fam);
  if (it == kKeyed.end()) throw ParseError("unknown family '" + fam + "'");
  s.family = it->second.first;
  const auto& keys = it->second.second;
  if (!has_args) throw ParseError(fam + ": missing parameters");
  static const std::regex kv(R"(([a-z]+)=(-?[0-9]+))");
  for (const auto& part : split(args, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, kv)) throw ParseError(fam + ": malformed parameter '" + part + "'");
    std::string key = m[1];
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError(fam + ": unknown key '" + key + "'");
    if (s.params.count(key)) throw ParseError(fam + ": repeated key '" + key + "'");
    s.params[key] = std::stol(m[2]);
  }
  for (const auto& k : keys)
    if (!s.params.count(k)) throw ParseError(fam + ": missing key '" + k + "'");
  return s;
}

}  // namespace einstab::spaces
