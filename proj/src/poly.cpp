#include "svectkit/poly.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace svectkit {

IntPoly IntPoly::constant(long long v) {
  IntPoly p;
  if (v != 0) p.c = {BigInt(v)};
  return p;
}

IntPoly IntPoly::monomial_minus_one(int n) {
  IntPoly p;
  p.c.assign(n + 1, BigInt(0));
  p.c[0] = -1;
  p.c[n] = 1;
  return p;
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

std::optional<IntPoly> IntPoly::div_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = c;
  std::vector<BigInt> quot(degree() - d.degree() + 1, BigInt(0));
  const BigInt& lead = d.c.back();
  for (int k = (int)quot.size() - 1; k >= 0; --k) {
    BigInt top = rem[k + d.degree()];
    if (top % lead != 0) return std::nullopt;
    BigInt q = top / lead;
    quot[k] = q;
    if (q != 0)
      for (size_t i = 0; i < d.c.size(); ++i) rem[k + i] -= q * d.c[i];
  }
  for (const BigInt& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) r = r * x + c[i];
  return r;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (c[d] == 0) continue;
    BigInt v = c[d];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (d == 0 || v != 1) os << v.str();
    if (d > 0) {
      if (v != 1) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

long long euler_phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const IntPoly& cyclotomic(int d) {
  static std::mutex mu;
  static std::unordered_map<int, IntPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  std::function<const IntPoly&(int)> get = [&](int n) -> const IntPoly& {
    auto i2 = memo.find(n);
    if (i2 != memo.end()) return i2->second;
    IntPoly num = IntPoly::monomial_minus_one(n);
    for (int e = 1; e < n; ++e) {
      if (n % e != 0) continue;
      auto q = num.div_exact(get(e));
      if (!q) throw std::logic_error("cyclotomic: inexact division");
      num = *q;
    }
    return memo.emplace(n, std::move(num)).first->second;
  };
  return get(d);
}

bool CycloFactorization::complete() const {
  return remainder.degree() == 0 && remainder.c[0] == 1;
}

std::string CycloFactorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, e] : multiplicity) {
    if (!first) os << "*";
    os << "F" << d;
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) os << "1";
  if (!complete()) os << "*(" << remainder.str() << ")";
  return os.str();
}

CycloFactorization factor_cyclotomic(const IntPoly& p, int max_order) {
  if (p.is_zero())
    throw std::invalid_argument("factor_cyclotomic: zero polynomial");
  CycloFactorization f;
  f.remainder = p;
  int deg = p.degree();
  if (max_order <= 0) max_order = 2 * deg * deg + 2;
  for (int d = 1; d <= max_order && f.remainder.degree() > 0; ++d) {
    if (euler_phi(d) > f.remainder.degree()) continue;
    const IntPoly& phi = cyclotomic(d);
    for (;;) {
      auto q = f.remainder.div_exact(phi);
      if (!q) break;
      ++f.multiplicity[d];
      f.remainder = *q;
    }
  }
  return f;
}

}  // namespace svectkit
