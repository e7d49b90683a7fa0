#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svectkit/matrix.hpp"

namespace svectkit {

// Integer polynomial, dense coefficients in ascending degree order with no
// trailing zeros (the zero polynomial has an empty coefficient vector).
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly constant(long long v);
  static IntPoly monomial_minus_one(int n);  // x^n - 1

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c == b.c;
  }

  // exact quotient, or nullopt if the division leaves a remainder
  std::optional<IntPoly> div_exact(const IntPoly& d) const;

  BigInt eval(const BigInt& x) const;
  std::string str() const;  // human-readable, highest degree first
};

// d-th cyclotomic polynomial (memoized)
const IntPoly& cyclotomic(int d);

struct CycloFactorization {
  std::map<int, int> multiplicity;  // d -> exponent of Phi_d
  IntPoly remainder;                // non-cyclotomic cofactor
  bool complete() const;            // remainder is the constant 1
  std::string str() const;          // e.g. "F2^2*F6*F18^2"
};

// Split off every cyclotomic factor Phi_d with phi(d) <= deg(p) and
// d <= max_order (pass 0 for an automatic quadratic bound in deg(p)).
CycloFactorization factor_cyclotomic(const IntPoly& p, int max_order = 0);

long long euler_phi(long long n);

}  // namespace svectkit
