#include "svectkit/tubular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace svectkit {

TubularType tubular_type_from_weights(const std::vector<int>& weights) {
  std::vector<int> w = weights;
  std::sort(w.begin(), w.end());
  if (w == std::vector<int>{2, 3, 6}) return TubularType::T236;
  if (w == std::vector<int>{2, 4, 4}) return TubularType::T244;
  if (w == std::vector<int>{3, 3, 3}) return TubularType::T333;
  if (w == std::vector<int>{2, 2, 2, 2}) return TubularType::T2222;
  throw std::invalid_argument("tubular: weights are not a tubular type");
}

std::string tubular_type_str(TubularType t) {
  switch (t) {
    case TubularType::T236: return "(2,3,6)";
    case TubularType::T244: return "(2,4,4)";
    case TubularType::T333: return "(3,3,3)";
    case TubularType::T2222: return "(2,2,2,2)";
  }
  return "";
}

int l0_orbit_count(TubularType t) {
  switch (t) {
    case TubularType::T236: return 6;
    case TubularType::T244: return 8;
    case TubularType::T333: return 9;
    case TubularType::T2222: return 8;
  }
  return 0;
}

Rat alpha_inv(TubularType t, const Rat& q) {
  if (t == TubularType::T236) return q - Rat(3);
  if (t == TubularType::T244) return q - Rat(2);
  long long n = q.floor();
  Rat q0 = q - Rat(n);
  if (t == TubularType::T333) {
    if (q0 <= Rat(1, 2))
      return Rat(n) + (Rat(5) * q0 - Rat(3)) / (Rat(2) - Rat(3) * q0);
    return Rat(n) + q0 / (Rat(1) - Rat(3) * q0);
  }
  // (2,2,2,2)
  if (q0 <= Rat(1, 3))
    return Rat(n) + (Rat(11) * q0 - Rat(4)) / (Rat(3) - Rat(8) * q0);
  return Rat(n) + q0 / (Rat(1) - Rat(4) * q0);
}

Rat alpha(TubularType t, const Rat& q) {
  if (t == TubularType::T236) return q + Rat(3);
  if (t == TubularType::T244) return q + Rat(2);
  if (t == TubularType::T333) {
    // the image of [n, n+1) is [n - 3/2, n - 1/2)
    long long n = (q + Rat(3, 2)).floor();
    Rat y0 = q - Rat(n);
    Rat r = (y0 <= Rat(-1))
                ? (Rat(2) * y0 + Rat(3)) / (Rat(3) * y0 + Rat(5))
                : y0 / (Rat(1) + Rat(3) * y0);
    return Rat(n) + r;
  }
  // (2,2,2,2): the image of [n, n+1) is [n - 4/3, n - 1/3)
  long long n = (q + Rat(4, 3)).floor();
  Rat y0 = q - Rat(n);
  Rat r = (y0 <= Rat(-1))
              ? (Rat(3) * y0 + Rat(4)) / (Rat(8) * y0 + Rat(11))
              : y0 / (Rat(1) + Rat(4) * y0);
  return Rat(n) + r;
}

bool tubular_factorization_predicate(TubularType t, const Rat& q,
                                     const Rat& q2) {
  return q2 > alpha(t, q);
}

std::vector<CoverSummand> cover_structure_236(long long d, long long r) {
  if (r <= 0 || d < 0 || d >= r || std::gcd(d, r) != 1)
    throw std::invalid_argument("cover_structure_236: need coprime 0 <= d < r");
  WeightTriple w(2, 3, 6);
  LElt om = LElt::omega(w);
  LElt x3 = LElt::gen(w, 2);
  std::vector<CoverSummand> out;
  for (long long j = 0; j < 6; ++j) {
    LElt base = j * om;
    if (d > 0) out.push_back({base, d});
    out.push_back({base - x3, r});
    if (r - d > 0) out.push_back({base - 2 * x3, r - d});
  }
  return out;
}

}  // namespace svectkit
