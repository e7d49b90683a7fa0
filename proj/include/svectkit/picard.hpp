#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "svectkit/rational.hpp"

namespace svectkit {

// Weight triple (p1,p2,p3) of a weighted projective line, all weights >= 2.
struct WeightTriple {
  int p[3];

  WeightTriple(int p1, int p2, int p3);

  int weight(int i) const { return p[i]; }  // 0-based index
  long long lcm() const;                    // least common multiple p-bar
  WeightTriple sorted() const;

  friend bool operator==(const WeightTriple& a, const WeightTriple& b) {
    return a.p[0] == b.p[0] && a.p[1] == b.p[1] && a.p[2] == b.p[2];
  }
  friend bool operator!=(const WeightTriple& a, const WeightTriple& b) {
    return !(a == b);
  }

  // number of weight-2 entries
  int count_weight_two() const;
  std::string str() const;
};

// Element of the rank-one grading group on generators x1,x2,x3 with
// relations p1*x1 = p2*x2 = p3*x3 (the common value being the canonical
// element c).  Kept in normal form l1*x1 + l2*x2 + l3*x3 + m*c with
// 0 <= li < pi; two elements are equal iff their normal forms agree.
struct LElt {
  WeightTriple w;
  int l[3] = {0, 0, 0};
  long long m = 0;

  explicit LElt(const WeightTriple& wt) : w(wt) {}
  LElt(const WeightTriple& wt, long long n1, long long n2, long long n3,
       long long nc);

  static LElt zero(const WeightTriple& wt) { return LElt(wt); }
  static LElt gen(const WeightTriple& wt, int i);  // xi, 0-based i
  static LElt canonical(const WeightTriple& wt);   // c
  static LElt omega(const WeightTriple& wt);       // dualizing element
  static LElt dominant(const WeightTriple& wt);    // c + 2*omega

  friend LElt operator+(const LElt& a, const LElt& b);
  friend LElt operator-(const LElt& a, const LElt& b);
  LElt operator-() const;
  friend LElt operator*(long long k, const LElt& a);

  friend bool operator==(const LElt& a, const LElt& b) {
    return a.w == b.w && a.l[0] == b.l[0] && a.l[1] == b.l[1] &&
           a.l[2] == b.l[2] && a.m == b.m;
  }
  friend bool operator!=(const LElt& a, const LElt& b) { return !(a == b); }
  friend bool operator<(const LElt& a, const LElt& b);  // lex on (l1,l2,l3,m)

  bool is_zero() const { return l[0] == 0 && l[1] == 0 && l[2] == 0 && m == 0; }
  // inside the closed cuboid 0 <= li <= pi-2, m == 0
  bool in_cuboid() const;

  long long delta() const;  // degree map, delta(xi) = pbar/pi, delta(c) = pbar

  std::string str() const;
};

bool is_effective(const LElt& x);               // x >= 0
bool leq(const LElt& x, const LElt& y);         // x <= y

// Dimension of the degree-x piece of the polynomial ring k[X1,X2,X3] with
// deg Xi = xi (triangle-number closed form; 0 for non-effective x).
long long dim_poly(const LElt& x);
// Dimension of the degree-x piece of the hypersurface ring
// k[X1,X2,X3]/(X1^p1 + X2^p2 - X3^p3).
long long dim_S(const LElt& x);

long long hom_dim(const LElt& x, const LElt& y);  // Hom(O(x), O(y))
long long ext_dim(const LElt& x, const LElt& y);  // Ext^1(O(x), O(y))

struct TripleInvariants {
  WeightTriple weights;
  long long pbar;
  Rat euler_char;         // 2 - sum(1 - 1/pi)
  long long gorenstein;   // a+b+c-1 - (a-1)(b-1)(c-1)
  long long delta_omega;
  LElt omega;
  LElt dominant;
};

TripleInvariants invariants_of_triple(const WeightTriple& w);

}  // namespace svectkit
