#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace svectkit {

using BigInt = boost::multiprecision::cpp_int;

// Dense square/rectangular integer matrix.  Entries stay tiny for the
// Cartan and Coxeter matrices handled here; every operation that could
// overflow 64 bits checks a hard magnitude cap and throws.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
  long long at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  IntMatrix negated() const;
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const;
};

// Exact inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

BigInt det_exact(const IntMatrix& m);

// Solve m * x = v exactly over the rationals, requiring an integral
// solution (throws if the system is singular or the solution fractional).
std::vector<long long> solve_integral(const IntMatrix& m,
                                      const std::vector<long long>& v);

// Multiplicative order of m, computed by iterating exact powers.  Throws
// if the order exceeds cap.
long long matrix_order(const IntMatrix& m, long long cap);

// Characteristic polynomial of m, monic, coefficients in ascending degree
// order.  coeff_bound must dominate the absolute value of every
// coefficient; pass 0 to use a Hadamard-type bound computed from the
// entries (fine for small matrices, expensive for large ones).
std::vector<BigInt> charpoly(const IntMatrix& m, const BigInt& coeff_bound = 0);

// true iff m^k is the identity (k >= 0), via binary powering.
bool is_matrix_power_identity(const IntMatrix& m, long long k);

}  // namespace svectkit
