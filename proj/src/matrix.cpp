#include "svectkit/matrix.hpp"

#include <boost/rational.hpp>
#include <stdexcept>

namespace svectkit {

namespace {

constexpr long long kEntryCap = 1000000000000LL;  // 1e12

void check_entries(const IntMatrix& m) {
  for (long long v : m.a)
    if (v > kEntryCap || v < -kEntryCap)
      throw std::overflow_error("IntMatrix: entry magnitude cap exceeded");
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
  check_entries(x);
  check_entries(y);
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      const long long* yr = &y.a[(size_t)k * y.cols];
      long long* rr = &r.a[(size_t)i * r.cols];
      for (int j = 0; j < y.cols; ++j) rr[j] += v * yr[j];
    }
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
  return r;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
  if ((int)v.size() != cols) throw std::invalid_argument("IntMatrix: shape mismatch");
  std::vector<long long> r(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

using BigRat = boost::rational<BigInt>;

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  int n = m.rows;
  std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(2 * n, BigRat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = BigRat(m.at(i, j));
    a[i][n + i] = BigRat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != BigRat(0)) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    std::swap(a[col], a[piv]);
    BigRat d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == BigRat(0)) continue;
      BigRat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const BigRat& v = a[i][n + j];
      if (v.denominator() != 1)
        throw std::invalid_argument("inverse: matrix not unimodular");
      inv.at(i, j) = (long long)v.numerator();
    }
  return inv;
}

BigInt det_exact(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  int n = m.rows;
  // fraction-free Bareiss elimination
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<long long> solve_integral(const IntMatrix& m,
                                      const std::vector<long long>& v) {
  if (m.rows != m.cols || (int)v.size() != m.rows)
    throw std::invalid_argument("solve: shape mismatch");
  int n = m.rows;
  std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(n + 1, BigRat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = BigRat(m.at(i, j));
    a[i][n] = BigRat(v[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != BigRat(0)) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("solve: singular matrix");
    std::swap(a[col], a[piv]);
    BigRat d = a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == BigRat(0)) continue;
      BigRat f = a[i][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<long long> x(n);
  for (int i = 0; i < n; ++i) {
    if (a[i][n].denominator() != 1)
      throw std::invalid_argument("solve: non-integral solution");
    x[i] = (long long)a[i][n].numerator();
  }
  return x;
}

long long matrix_order(const IntMatrix& m, long long cap) {
  if (m.rows != m.cols) throw std::invalid_argument("order: not square");
  IntMatrix id = IntMatrix::identity(m.rows);
  IntMatrix pw = m;
  for (long long k = 1; k <= cap; ++k) {
    if (pw == id) return k;
    pw = pw * m;
  }
  throw std::runtime_error("matrix_order: order exceeds cap");
}

bool is_matrix_power_identity(const IntMatrix& m, long long k) {
  IntMatrix acc = IntMatrix::identity(m.rows);
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc == IntMatrix::identity(m.rows);
}

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

u64 modinv(u64 a, u64 p) { return powmod(a, p - 2, p); }

// characteristic polynomial mod p via Hessenberg reduction, monic ascending
std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
  int n = m.rows;
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = m.at(i, j) % (long long)p;
      if (v < 0) v += p;
      h[i][j] = (u64)v;
    }
  for (int k = 0; k < n - 2; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (h[i][k] != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    u64 inv = modinv(h[k + 1][k], p);
    for (int i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      u64 t = mulmod(h[i][k], inv, p);
      for (int j = k; j < n; ++j)
        h[i][j] = (h[i][j] + p - mulmod(t, h[k + 1][j], p)) % p;
      for (int r = 0; r < n; ++r)
        h[r][k + 1] = (h[r][k + 1] + mulmod(t, h[r][i], p)) % p;
    }
  }
  // recurrence on leading principal minors of the Hessenberg form
  std::vector<std::vector<u64>> pk(n + 1);
  pk[0] = {1};
  for (int k = 1; k <= n; ++k) {
    const auto& prev = pk[k - 1];
    std::vector<u64> cur(k + 1, 0);
    // (x - h[k-1][k-1]) * prev
    for (int d = 0; d < (int)prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mulmod(h[k - 1][k - 1], prev[d], p)) % p;
    }
    u64 subprod = 1;
    for (int i = k - 1; i >= 1; --i) {
      subprod = mulmod(subprod, h[i][i - 1], p);
      if (subprod == 0) break;
      u64 coef = mulmod(subprod, h[i - 1][k - 1], p);
      if (coef == 0) continue;
      const auto& pi = pk[i - 1];
      for (int d = 0; d < (int)pi.size(); ++d)
        cur[d] = (cur[d] + p - mulmod(coef, pi[d], p)) % p;
    }
    pk[k] = std::move(cur);
  }
  return pk[n];
}

}  // namespace

std::vector<BigInt> charpoly(const IntMatrix& m, const BigInt& coeff_bound) {
  if (m.rows != m.cols) throw std::invalid_argument("charpoly: not square");
  int n = m.rows;
  if (n == 0) return {BigInt(1)};
  BigInt bound = coeff_bound;
  if (bound == 0) {
    // coefficient k is a sum of C(n,k) minors, each bounded by the Hadamard
    // product of the largest column norms; coarse but safe for small n
    BigInt colprod = 1;
    for (int j = 0; j < n; ++j) {
      BigInt s = 0;
      for (int i = 0; i < n; ++i) s += BigInt(m.at(i, j)) * m.at(i, j);
      BigInt r = 1;
      while (r * r < s) ++r;
      colprod *= (r > 1 ? r : BigInt(1));
    }
    bound = colprod << n;  // 2^n covers the binomial sums
  }
  BigInt need = 2 * bound + 1;
  std::vector<u64> primes;
  BigInt prod = 1;
  u64 cand = (1ULL << 62) - 1;
  while (prod < need) {
    while (!is_prime(cand)) --cand;
    primes.push_back(cand);
    prod *= cand;
    --cand;
  }
  // CRT combine with symmetric lift
  std::vector<BigInt> res(n + 1, BigInt(0));
  BigInt mod = 1;
  for (u64 p : primes) {
    auto cp = charpoly_mod(m, p);
    if (mod == 1) {
      for (int d = 0; d <= n; ++d) res[d] = cp[d];
      mod = p;
      continue;
    }
    // combine: x = r (mod mod), x = cp (mod p)
    BigInt pB = p;
    BigInt modinv_p = 0;
    {
      // inverse of mod modulo p
      u64 mp = (u64)(mod % p);
      modinv_p = modinv(mp, p);
    }
    for (int d = 0; d <= n; ++d) {
      BigInt diff = ((BigInt(cp[d]) - res[d]) % pB + pB) % pB;
      BigInt t = (diff * modinv_p) % pB;
      res[d] += mod * t;
    }
    mod *= pB;
  }
  BigInt half = mod / 2;
  for (auto& c : res)
    if (c > half) c -= mod;
  return res;
}

}  // namespace svectkit
