#include "svectkit/coxzoo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svectkit {

TypeSymbol TypeSymbol::star(std::vector<int> branches) {
  if (branches.empty() || branches.size() > 3)
    throw std::invalid_argument("star: need 1..3 branch lengths");
  for (int b : branches)
    if (b < 1) throw std::invalid_argument("star: branch lengths must be >= 1");
  std::sort(branches.begin(), branches.end());
  return TypeSymbol{SymbolKind::Star, std::move(branches)};
}

static std::vector<int> sorted3(int a, int b, int c) {
  std::vector<int> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] < 2) throw std::invalid_argument("weights must be >= 2");
  return v;
}

TypeSymbol TypeSymbol::canonical(int a, int b, int c) {
  return TypeSymbol{SymbolKind::Canonical, sorted3(a, b, c)};
}
TypeSymbol TypeSymbol::stable_vect(int a, int b, int c) {
  return TypeSymbol{SymbolKind::StableVect, sorted3(a, b, c)};
}
TypeSymbol TypeSymbol::ext_canonical(int a, int b, int c) {
  return TypeSymbol{SymbolKind::ExtCanonical, sorted3(a, b, c)};
}
TypeSymbol TypeSymbol::nakayama(int n, int r) {
  // r > n is allowed: no path reaches length r, so the algebra is the
  // hereditary path algebra of the linear quiver
  if (n < 1 || r < 2)
    throw std::invalid_argument("nakayama: need n >= 1 and r >= 2");
  return TypeSymbol{SymbolKind::Nakayama, {n, r}};
}

int TypeSymbol::k0_rank() const {
  switch (kind) {
    case SymbolKind::Star: {
      int n = 1;
      for (int b : params) n += b - 1;
      return n;
    }
    case SymbolKind::Canonical:
      return params[0] + params[1] + params[2] - 1;
    case SymbolKind::StableVect:
      return (params[0] - 1) * (params[1] - 1) * (params[2] - 1);
    case SymbolKind::ExtCanonical:
      return params[0] + params[1] + params[2];
    case SymbolKind::Nakayama:
      return params[0];
  }
  return 0;
}

static std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string TypeSymbol::str() const {
  switch (kind) {
    case SymbolKind::Star:
      return "[" + join(params) + "]";
    case SymbolKind::Canonical:
      return "(" + join(params) + ")";
    case SymbolKind::StableVect:
      return "<" + join(params) + ">";
    case SymbolKind::ExtCanonical:
      return "<" + join(params) + "|1>";
    case SymbolKind::Nakayama:
      return "A_" + std::to_string(params[0]) + "(" +
             std::to_string(params[1]) + ")";
  }
  return "";
}

std::string TypeSymbol::key() const {
  switch (kind) {
    case SymbolKind::Star:
      return "star:" + join(params);
    case SymbolKind::Canonical:
      return "can:" + join(params);
    case SymbolKind::StableVect:
      return "svect:" + join(params);
    case SymbolKind::ExtCanonical:
      return "extcan:" + join(params);
    case SymbolKind::Nakayama:
      return "nak:" + join(params);
  }
  return "";
}

namespace {

// path-count Cartan matrix of the star quiver oriented away from the center
IntMatrix star_cartan(const std::vector<int>& branches) {
  int n = 1;
  for (int b : branches) n += b - 1;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 1;
  int v = 1;
  for (int b : branches) {
    int first = v;
    for (int k = 1; k < b; ++k) {
      c.at(0, v) = 1;
      for (int u = first; u < v; ++u) c.at(u, v) = 1;
      ++v;
    }
  }
  return c;
}

// Cartan matrix of the canonical algebra: source 0, three arms, sink n-1;
// the two relations leave a two-dimensional path space source -> sink.
IntMatrix canonical_cartan(const std::vector<int>& p) {
  int n = p[0] + p[1] + p[2] - 1;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 1;
  int sink = n - 1;
  int v = 1;
  for (int arm = 0; arm < 3; ++arm) {
    int first = v;
    for (int k = 1; k < p[arm]; ++k) {
      c.at(0, v) = 1;
      for (int u = first; u < v; ++u) c.at(u, v) = 1;
      c.at(v, sink) = 1;
      ++v;
    }
  }
  c.at(0, sink) = 2;
  return c;
}

IntMatrix nakayama_cartan(int n, int r) {
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n && j - i < r; ++j) c.at(i, j) = 1;
  return c;
}

// One-point extension by the projective at the sink of the canonical
// algebra (calibrated against the known rank-11 identifications).
IntMatrix ext_canonical_cartan(const std::vector<int>& p) {
  IntMatrix c = canonical_cartan(p);
  int n = c.rows;
  IntMatrix e(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.at(i, j) = c.at(i, j);
  int k = n - 1;  // sink vertex
  for (int i = 0; i < n; ++i) e.at(i, n) = c.at(i, k);
  e.at(n, n) = 1;
  return e;
}

IntPoly coxeter_charpoly(const IntMatrix& cartan) {
  IntMatrix phi =
      (inverse_unimodular(cartan).transpose() * cartan).negated();
  return IntPoly(charpoly(phi));
}

IntPoly u_poly(int n) { return IntPoly::monomial_minus_one(n); }

}  // namespace

IntMatrix cartan_of(const TypeSymbol& s) {
  switch (s.kind) {
    case SymbolKind::Star:
      return star_cartan(s.params);
    case SymbolKind::Canonical:
      return canonical_cartan(s.params);
    case SymbolKind::StableVect:
      return stab_cartan(WeightTriple(s.params[0], s.params[1], s.params[2]));
    case SymbolKind::ExtCanonical:
      return ext_canonical_cartan(s.params);
    case SymbolKind::Nakayama:
      return nakayama_cartan(s.params[0], s.params[1]);
  }
  throw std::logic_error("cartan_of: bad kind");
}

IntPoly coxpol(const TypeSymbol& s) {
  if (s.kind != SymbolKind::StableVect) return coxeter_charpoly(cartan_of(s));
  long long a = s.params[0], b = s.params[1], c = s.params[2];
  long long l = std::lcm(std::lcm(a, b), c);
  IntPoly num = IntPoly::constant(1);
  for (long long i = 0; i < a * b * c / l; ++i) num = num * u_poly((int)l);
  num = num * u_poly((int)a) * u_poly((int)b) * u_poly((int)c);
  IntPoly den = u_poly(1);
  auto pair_factor = [](long long x, long long y) {
    return std::make_pair(std::lcm(x, y), std::gcd(x, y));
  };
  for (auto [lxy, gxy] : {pair_factor(a, b), pair_factor(b, c),
                          pair_factor(c, a)})
    for (long long i = 0; i < gxy; ++i) den = den * u_poly((int)lxy);
  auto q = num.div_exact(den);
  if (!q) throw std::logic_error("coxpol: product formula division inexact");
  if (q->degree() != (int)((a - 1) * (b - 1) * (c - 1)))
    throw std::logic_error("coxpol: wrong degree");
  return *q;
}

long long coxeter_number_formula(const WeightTriple& w) {
  WeightTriple s = w.sorted();
  if (s.p[0] == 2 && s.p[1] == 2) return s.p[2];
  return s.lcm();
}

long long coxeter_number(const WeightTriple& w) {
  long long h = coxeter_number_formula(w);
  long long order = matrix_order(stab_coxeter(w), 4 * w.lcm());
  if (order != h)
    throw std::logic_error("coxeter_number: matrix order disagrees");
  return h;
}

CYDim cy_dimension(const WeightTriple& w) {
  WeightTriple s = w.sorted();
  long long a = s.p[0], b = s.p[1], c = s.p[2];
  Rat chi = invariants_of_triple(s).euler_char;
  Rat canceled = Rat(1) - Rat(2) * chi;
  if (a == 2 && b == 2) return CYDim{c - 1, c, canceled};
  if (a == 2) {
    long long l = std::lcm(b, c);
    return CYDim{2 * l - 2 * l / b - 2 * l / c, l, canceled};
  }
  long long l = s.lcm();
  return CYDim{3 * l - 2 * l / a - 2 * l / b - 2 * l / c, l, canceled};
}

OrlovReport orlov_trichotomy(const WeightTriple& w) {
  auto inv = invariants_of_triple(w);
  OrlovReport rep;
  rep.gorenstein = inv.gorenstein;
  if (inv.gorenstein == 0) {
    rep.kind = OrlovCase::Equivalent;
    return rep;
  }
  long long d_om = inv.delta_omega;
  rep.kind = inv.gorenstein > 0 ? OrlovCase::CohWindow : OrlovCase::StabWindow;
  for (int l1 = 0; l1 < w.p[0]; ++l1)
    for (int l2 = 0; l2 < w.p[1]; ++l2)
      for (long long l3 = 0; l3 < w.p[2]; ++l3)
        for (long long m = -4; m <= 2; ++m) {
          LElt x(w);
          x.l[0] = l1;
          x.l[1] = l2;
          x.l[2] = (int)l3;
          x.m = m;
          long long d = x.delta();
          bool in_window = inv.gorenstein > 0 ? (d_om < d && d <= 0)
                                              : (0 <= d && d < d_om);
          if (in_window) rep.window.push_back(x);
        }
  std::sort(rep.window.begin(), rep.window.end());
  if ((long long)rep.window.size() !=
      (inv.gorenstein > 0 ? inv.gorenstein : -inv.gorenstein))
    throw std::logic_error("orlov_trichotomy: window size mismatch");
  return rep;
}

std::vector<TypeSymbol> classify_nakayama(int n, int r) {
  TypeSymbol nak = TypeSymbol::nakayama(n, r);
  IntPoly target = coxpol(nak);
  std::vector<TypeSymbol> matches;
  auto consider = [&](const TypeSymbol& s) {
    if (coxpol(s) == target) matches.push_back(s);
  };
  // linear quiver
  if (n >= 1) consider(TypeSymbol::star({n}));
  // three-branch stars
  for (int a = 2; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int c = n + 2 - a - b;
      if (c >= b) consider(TypeSymbol::star({a, b, c}));
    }
  // canonical algebras
  for (int a = 2; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int c = n + 1 - a - b;
      if (c >= b) consider(TypeSymbol::canonical(a, b, c));
    }
  // stable bundle categories
  for (int a = 2; a <= n + 1; ++a)
    for (int b = a; b <= n + 1; ++b)
      for (int c = b; c <= n + 1; ++c)
        if ((a - 1) * (b - 1) * (c - 1) == n)
          consider(TypeSymbol::stable_vect(a, b, c));
  // one-point extensions, negative Euler characteristic only
  for (int a = 2; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int c = n - a - b;
      if (c < b) continue;
      if (invariants_of_triple(WeightTriple(a, b, c)).euler_char < Rat(0))
        consider(TypeSymbol::ext_canonical(a, b, c));
    }
  std::sort(matches.begin(), matches.end());
  return matches;
}

bool is_expected_stable_match(int n, int r, const TypeSymbol& s) {
  if (s.kind != SymbolKind::StableVect) return true;
  if (s.params[0] != 2) return false;
  int a = s.params[1], b = s.params[2];
  return (a - 1) * (b - 1) == n && (r == a || r == b);
}

bool domestic_factorization_predicate(const WeightTriple& w, const Rat& mu_x,
                                      const Rat& mu_y) {
  auto inv = invariants_of_triple(w);
  if (!(inv.euler_char > Rat(0)))
    throw std::invalid_argument("domestic predicate: not domestic");
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (w.p[i] < w.p[axis]) axis = i;
  LElt threshold = LElt::gen(w, axis) + LElt::omega(w);
  return mu_y - mu_x > Rat(threshold.delta());
}

}  // namespace svectkit
