#pragma once

#include <string>
#include <vector>

#include "svectkit/ktheory.hpp"
#include "svectkit/poly.hpp"

namespace svectkit {

enum class SymbolKind { Star, Canonical, StableVect, ExtCanonical, Nakayama };

// A symbol naming one of the triangulated categories whose Coxeter
// polynomial the zoo knows how to produce:
//   Star         [b1,...,bk]   hereditary star quiver, branch lengths bi
//   Canonical    (a,b,c)       module category of the canonical algebra
//   StableVect   <a,b,c>       stable category of bundles
//   ExtCanonical <a,b,c|1>     one-point extension of the canonical algebra
//   Nakayama     A_n(r)        linear Nakayama algebra, paths of length < r
struct TypeSymbol {
  SymbolKind kind;
  std::vector<int> params;

  static TypeSymbol star(std::vector<int> branches);
  static TypeSymbol canonical(int a, int b, int c);
  static TypeSymbol stable_vect(int a, int b, int c);
  static TypeSymbol ext_canonical(int a, int b, int c);
  static TypeSymbol nakayama(int n, int r);

  int k0_rank() const;
  std::string str() const;  // display form, e.g. "[2,3,5]", "<2,3,7>"
  std::string key() const;  // grammar form, e.g. "star:2,3,5", "nak:12,3"

  friend bool operator==(const TypeSymbol& a, const TypeSymbol& b) {
    return a.kind == b.kind && a.params == b.params;
  }
  friend bool operator<(const TypeSymbol& a, const TypeSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.params < b.params;
  }
};

// Cartan matrix (dim Hom(P_i, P_j)) of the algebra the symbol names.
IntMatrix cartan_of(const TypeSymbol& s);

// Coxeter polynomial.  For StableVect this expands the closed product
// formula in the u_n = x^n - 1; all other kinds take the characteristic
// polynomial of -C^{-T} C.
IntPoly coxpol(const TypeSymbol& s);

// Coxeter number: the non-2 weight for shape (2,2,n), otherwise lcm of
// the weights; cross-checked against the multiplicative order of the
// stable Coxeter matrix (throws on mismatch).
long long coxeter_number(const WeightTriple& w);
long long coxeter_number_formula(const WeightTriple& w);  // no matrix check

struct CYDim {
  long long num;  // uncanceled fraction as printed
  long long den;
  Rat canceled;   // 1 - 2*chi
};
CYDim cy_dimension(const WeightTriple& w);

enum class OrlovCase { CohWindow, Equivalent, StabWindow };

struct OrlovReport {
  OrlovCase kind;
  long long gorenstein;
  // line-bundle twists (positive case) resp. Auslander-bundle parameters
  // (negative case) spanning the orthogonal window; empty when equivalent
  std::vector<LElt> window;
};

OrlovReport orlov_trichotomy(const WeightTriple& w);

// All known symbols with the same K0 rank and the same Coxeter polynomial
// as the Nakayama algebra A_n(r), sorted deterministically.
std::vector<TypeSymbol> classify_nakayama(int n, int r);

// true when the match is explained by the stable-bundle correspondence
// for weight type (2,a,b) with n = (a-1)(b-1) and r one of a, b; a
// StableVect match failing this test is a spontaneous identification.
bool is_expected_stable_match(int n, int r, const TypeSymbol& s);

// Slope threshold test for morphism factorization through an intermediate
// twist in the positive-Euler-characteristic case.
bool domestic_factorization_predicate(const WeightTriple& w, const Rat& mu_x,
                                      const Rat& mu_y);

}  // namespace svectkit
