#pragma once

#include <string>
#include <vector>

#include "svectkit/picard.hpp"

namespace svectkit {

// The four weight types with vanishing Euler characteristic.
enum class TubularType { T236, T244, T333, T2222 };

TubularType tubular_type_from_weights(const std::vector<int>& weights);
std::string tubular_type_str(TubularType t);

// Order of the tau-orbit set L0 of line bundles used in the slope-zero
// covers: 6, 8, 9, 8 respectively.
int l0_orbit_count(TubularType t);

// Piecewise fractional-linear slope map alpha and its inverse; alpha_inv
// carries the slope of a stable sheaf to the slope of the co-suspended
// quasi-simple below it.
Rat alpha_inv(TubularType t, const Rat& q);
Rat alpha(TubularType t, const Rat& q);

// Slope threshold test for morphism factorization in the tubular case:
// morphisms of slope pair (q, q') factor through the distinguished
// intermediate family iff q' exceeds alpha(q).
bool tubular_factorization_predicate(TubularType t, const Rat& q,
                                     const Rat& q2);

struct CoverSummand {
  LElt twist;
  long long mult;
};

// Line-bundle decomposition of the projective cover of the slope d/r
// quasi-simple family in type (2,3,6); requires gcd(d,r) = 1, 0 <= d < r.
std::vector<CoverSummand> cover_structure_236(long long d, long long r);

}  // namespace svectkit
