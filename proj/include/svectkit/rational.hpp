#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace svectkit {

// Exact rational number on 64-bit integers.  All quantities handled here
// (Euler characteristics, slopes, Calabi-Yau dimensions) are tiny, so no
// arbitrary precision is needed; operations throw on division by zero.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    reduce();
  }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { return Rat(-num, den); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace svectkit
