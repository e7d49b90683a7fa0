#include "svectkit/picard.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svectkit {

WeightTriple::WeightTriple(int p1, int p2, int p3) : p{p1, p2, p3} {
  for (int i = 0; i < 3; ++i)
    if (p[i] < 2) throw std::invalid_argument("WeightTriple: weights must be >= 2");
}

long long WeightTriple::lcm() const {
  long long l = std::lcm((long long)p[0], (long long)p[1]);
  return std::lcm(l, (long long)p[2]);
}

WeightTriple WeightTriple::sorted() const {
  int a = p[0], b = p[1], c = p[2];
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return WeightTriple(a, b, c);
}

int WeightTriple::count_weight_two() const {
  return (p[0] == 2) + (p[1] == 2) + (p[2] == 2);
}

std::string WeightTriple::str() const {
  std::ostringstream os;
  os << "(" << p[0] << "," << p[1] << "," << p[2] << ")";
  return os.str();
}

LElt::LElt(const WeightTriple& wt, long long n1, long long n2, long long n3,
           long long nc)
    : w(wt) {
  long long n[3] = {n1, n2, n3};
  m = nc;
  for (int i = 0; i < 3; ++i) {
    long long pi = w.p[i];
    long long li = ((n[i] % pi) + pi) % pi;
    l[i] = (int)li;
    m += (n[i] - li) / pi;
  }
}

LElt LElt::gen(const WeightTriple& wt, int i) {
  LElt x(wt);
  x.l[i] = 1;
  return x;
}

LElt LElt::canonical(const WeightTriple& wt) {
  LElt x(wt);
  x.m = 1;
  return x;
}

LElt LElt::omega(const WeightTriple& wt) {
  return LElt(wt, -1, -1, -1, 1);
}

LElt LElt::dominant(const WeightTriple& wt) {
  return LElt(wt, wt.p[0] - 2, wt.p[1] - 2, wt.p[2] - 2, 0);
}

static void require_same(const LElt& a, const LElt& b) {
  if (a.w != b.w)
    throw std::invalid_argument("LElt: mixed weight triples");
}

LElt operator+(const LElt& a, const LElt& b) {
  require_same(a, b);
  return LElt(a.w, a.l[0] + b.l[0], a.l[1] + b.l[1], a.l[2] + b.l[2],
              a.m + b.m);
}

LElt operator-(const LElt& a, const LElt& b) {
  require_same(a, b);
  return LElt(a.w, a.l[0] - b.l[0], a.l[1] - b.l[1], a.l[2] - b.l[2],
              a.m - b.m);
}

LElt LElt::operator-() const {
  return LElt(w, -l[0], -l[1], -l[2], -m);
}

LElt operator*(long long k, const LElt& a) {
  return LElt(a.w, k * a.l[0], k * a.l[1], k * a.l[2], k * a.m);
}

bool operator<(const LElt& a, const LElt& b) {
  require_same(a, b);
  if (a.l[0] != b.l[0]) return a.l[0] < b.l[0];
  if (a.l[1] != b.l[1]) return a.l[1] < b.l[1];
  if (a.l[2] != b.l[2]) return a.l[2] < b.l[2];
  return a.m < b.m;
}

bool LElt::in_cuboid() const {
  if (m != 0) return false;
  for (int i = 0; i < 3; ++i)
    if (l[i] > w.p[i] - 2) return false;
  return true;
}

long long LElt::delta() const {
  long long pbar = w.lcm();
  long long d = m * pbar;
  for (int i = 0; i < 3; ++i) d += l[i] * (pbar / w.p[i]);
  return d;
}

std::string LElt::str() const {
  std::ostringstream os;
  os << "[" << l[0] << "," << l[1] << "," << l[2] << "," << m << "]";
  return os.str();
}

bool is_effective(const LElt& x) { return x.m >= 0; }

bool leq(const LElt& x, const LElt& y) { return is_effective(y - x); }

long long dim_poly(const LElt& x) {
  if (x.m < 0) return 0;
  return (x.m + 2) * (x.m + 1) / 2;
}

long long dim_S(const LElt& x) {
  return dim_poly(x) - dim_poly(x - LElt::canonical(x.w));
}

long long hom_dim(const LElt& x, const LElt& y) { return dim_S(y - x); }

long long ext_dim(const LElt& x, const LElt& y) {
  // Serre duality: Ext^1(O(x), O(y)) = Hom(O(y), O(x + omega))*
  return dim_S(x + LElt::omega(x.w) - y);
}

TripleInvariants invariants_of_triple(const WeightTriple& w) {
  long long a = w.p[0], b = w.p[1], c = w.p[2];
  Rat chi = Rat(2) - (Rat(1) - Rat(1, a)) - (Rat(1) - Rat(1, b)) -
            (Rat(1) - Rat(1, c));
  long long gor = (a + b + c - 1) - (a - 1) * (b - 1) * (c - 1);
  LElt om = LElt::omega(w);
  return TripleInvariants{w,  w.lcm(), chi, gor, om.delta(), om,
                          LElt::dominant(w)};
}

}  // namespace svectkit
