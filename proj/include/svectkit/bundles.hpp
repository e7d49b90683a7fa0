#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svectkit/picard.hpp"

namespace svectkit {

// Symbolic rank-two bundle expression E_{O(base)}<interior>[susp]: the
// middle term of the extension of O(base + interior) by O(base + omega)
// along the socle element, suspended susp times in the stable category.
// The interior element must lie in the closed cuboid 0 <= x <= dominant.
struct ExtBundleExpr {
  LElt base;
  LElt interior;
  int susp = 0;

  ExtBundleExpr(const LElt& b, const LElt& x, int s = 0);

  // Auslander bundle E(y) = E_{O(y)}<0>
  static ExtBundleExpr auslander(const WeightTriple& w, const LElt& y);
  static ExtBundleExpr auslander(const WeightTriple& w);  // E = E(0)

  bool is_auslander() const { return interior.is_zero(); }

  friend bool operator==(const ExtBundleExpr& a, const ExtBundleExpr& b) {
    return a.base == b.base && a.interior == b.interior && a.susp == b.susp;
  }
  friend bool operator!=(const ExtBundleExpr& a, const ExtBundleExpr& b) {
    return !(a == b);
  }

  std::string str() const;
};

// The two expressions denote isomorphic objects (compares suspension-free
// rewritten forms, so E<x>[2] and E<x>(c) agree).
bool same_object(const ExtBundleExpr& a, const ExtBundleExpr& b);

// Rewrite with susp == 0 using the suspension formula and the
// two-fold-suspension-is-twist-by-c rule.
ExtBundleExpr canonical_form(const ExtBundleExpr& e);

ExtBundleExpr suspend(const ExtBundleExpr& e, int k = 1);
ExtBundleExpr twist(const ExtBundleExpr& e, const LElt& z);
ExtBundleExpr tau(const ExtBundleExpr& e, int k = 1);

// determinant, rank and slope of the underlying bundle (susp must be even
// up to rewriting; computed on the canonical form)
LElt det_of(const ExtBundleExpr& e);
Rat slope_of(const ExtBundleExpr& e);

struct HullReport {
  std::vector<LElt> injective_twists;   // inj hull = direct sum of O(t)
  std::vector<LElt> projective_twists;  // proj cover likewise
};

HullReport hulls(const ExtBundleExpr& e);

ExtBundleExpr dualize(const ExtBundleExpr& e);
ExtBundleExpr reflect(const ExtBundleExpr& e);  // geometric reflection Lambda

// Rewrite along the reflection of the cuboid in coordinate direction
// axis (0-based): an isomorphic expression whose interior has the two
// complementary coordinates flipped.
ExtBundleExpr cuboid_symmetry(const ExtBundleExpr& e, int axis);

// dim of stable Hom between the two expressions; nullopt when the pair is
// outside the combinatorially understood shapes (neither side rewrites to
// an Auslander bundle).
std::optional<long long> shom_dims(const ExtBundleExpr& from,
                                   const ExtBundleExpr& to);

// cone of the canonical map E<x> -> E<x + xi> (requires x + xi <= dominant)
ExtBundleExpr cone_of_vi(const ExtBundleExpr& e, int axis);

struct FundamentalDecomposition {
  bool found = false;
  std::optional<LElt> cuboid;  // component in the closed cuboid
  std::optional<LElt> shift;   // component in the shift subgroup
};

// Decompose z = cuboid + shift where shift lies in the subgroup generated
// by omega, c and the weight-two generators.  May fail (e.g. for (3,3,3)).
FundamentalDecomposition fundamental_decompose(const LElt& z);

// Tilting object for weight type (2,a,b): the sequence of extension-bundle
// summands whose endomorphism algebra is the Nakayama algebra with
// (a-1)(b-1) simples and nilpotency degree a.
std::vector<ExtBundleExpr> build_2ab_tilting(int a, int b);

}  // namespace svectkit
