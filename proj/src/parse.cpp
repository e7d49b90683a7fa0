#include "svectkit/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace svectkit {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<long long> parse_int_list(const std::string& s, char sep) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) {
    tok = strip(tok);
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace

LElt parse_lelt(const WeightTriple& w, const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw std::invalid_argument("empty element");
  if (s == "0") return LElt::zero(w);
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated [..]");
    auto v = parse_int_list(s.substr(1, s.size() - 2), ',');
    if (v.size() != 4)
      throw std::invalid_argument("normal form needs four coordinates");
    return LElt(w, v[0], v[1], v[2], v[3]);
  }
  long long n[4] = {0, 0, 0, 0};  // x1, x2, x3, c coefficients
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() &&
           (s[i] == '+' || s[i] == '-' || std::isspace((unsigned char)s[i]))) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) break;
    long long coef = 1;
    bool have_num = false;
    if (std::isdigit((unsigned char)s[i])) {
      coef = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i]))
        coef = coef * 10 + (s[i++] - '0');
      have_num = true;
    }
    while (i < s.size() &&
           (s[i] == '*' || std::isspace((unsigned char)s[i]))) ++i;
    int slot = -1;
    if (i < s.size() && s[i] == 'x' && i + 1 < s.size() &&
        s[i + 1] >= '1' && s[i + 1] <= '3') {
      slot = s[i + 1] - '1';
      i += 2;
    } else if (i < s.size() && s[i] == 'c') {
      slot = 3;
      i += 1;
    } else if (have_num) {
      throw std::invalid_argument("bare integer term (use k*c)");
    } else {
      throw std::invalid_argument("expected x1, x2, x3 or c");
    }
    n[slot] += sign * coef;
    any = true;
  }
  // "0" alone denotes the zero element
  if (!any && strip(raw) != "0")
    throw std::invalid_argument("cannot parse element: " + raw);
  return LElt(w, n[0], n[1], n[2], n[3]);
}

ExtBundleExpr parse_bundle(const WeightTriple& w, const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty() || s[0] != 'E')
    throw std::invalid_argument("bundle expression must start with E");
  size_t i = 1;
  LElt interior = LElt::zero(w);
  LElt base = LElt::zero(w);
  int susp = 0;
  if (i < s.size() && s[i] == '<') {
    size_t close = s.find('>', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated <..>");
    interior = parse_lelt(w, s.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  if (i < s.size() && s[i] == '(') {
    size_t close = s.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated (..)");
    base = parse_lelt(w, s.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  if (i < s.size() && s[i] == '[') {
    size_t close = s.find(']', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated [..]");
    std::string k = strip(s.substr(i + 1, close - i - 1));
    size_t pos = 0;
    susp = (int)std::stol(k, &pos);
    if (pos != k.size()) throw std::invalid_argument("bad suspension count");
    i = close + 1;
  }
  if (i != s.size())
    throw std::invalid_argument("trailing characters in bundle expression");
  return ExtBundleExpr(base, interior, susp);
}

TypeSymbol parse_symbol(const std::string& raw) {
  std::string s = strip(raw);
  size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("symbol needs the form kind:params");
  std::string kind = s.substr(0, colon);
  auto v = parse_int_list(s.substr(colon + 1), ',');
  std::vector<int> p(v.begin(), v.end());
  if (kind == "star") return TypeSymbol::star(p);
  if (v.size() != (kind == "nak" ? 2 : 3))
    throw std::invalid_argument("symbol needs three weights (nak: n,r)");
  if (kind == "can") return TypeSymbol::canonical(p[0], p[1], p[2]);
  if (kind == "svect") return TypeSymbol::stable_vect(p[0], p[1], p[2]);
  if (kind == "extcan") return TypeSymbol::ext_canonical(p[0], p[1], p[2]);
  if (kind == "nak") return TypeSymbol::nakayama(p[0], p[1]);
  throw std::invalid_argument("unknown symbol kind: " + kind);
}

std::string lelt_json(const LElt& x) {
  std::ostringstream os;
  os << "{\"l\":[" << x.l[0] << "," << x.l[1] << "," << x.l[2] << "],\"m\":"
     << x.m << "}";
  return os.str();
}

}  // namespace svectkit
