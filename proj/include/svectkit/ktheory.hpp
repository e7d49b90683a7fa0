#pragma once

#include <optional>
#include <vector>

#include "svectkit/bundles.hpp"
#include "svectkit/matrix.hpp"
#include "svectkit/picard.hpp"

namespace svectkit {

// Grothendieck group of the category of sheaves: coordinates over the
// basis [O(x)] for 0 <= x <= c, ordered lexicographically by normal form.
struct K0CohClass {
  WeightTriple w;
  std::vector<long long> coords;

  K0CohClass(const WeightTriple& wt, std::vector<long long> c)
      : w(wt), coords(std::move(c)) {}
  friend bool operator==(const K0CohClass& a, const K0CohClass& b) {
    return a.w == b.w && a.coords == b.coords;
  }
  K0CohClass operator-(const K0CohClass& o) const;
  K0CohClass operator+(const K0CohClass& o) const;
};

std::vector<LElt> coh_basis(const WeightTriple& w);  // size a+b+c-1
IntMatrix coh_euler_matrix(const WeightTriple& w);

K0CohClass class_of_line(const LElt& z);
K0CohClass class_of_simple(const WeightTriple& w, int axis, const LElt& at);
K0CohClass class_of_ordinary_simple(const WeightTriple& w, const LElt& at);
K0CohClass class_of_bundle(const ExtBundleExpr& e);

// matrix of the twist by omega on the coherent classes
IntMatrix coh_omega_shift(const WeightTriple& w);

long long euler_form(const K0CohClass& x, const K0CohClass& y);
long long averaged_euler_form(const K0CohClass& x, const K0CohClass& y);

struct LinearForms {
  long long rank;
  long long degree;
  LElt det;
  std::optional<Rat> slope;  // nullopt for rank 0 (slope infinity)
};
LinearForms linear_forms(const K0CohClass& x);

// Grothendieck group of the stable category: coordinates over the classes
// of the extension bundles E<x>, x in the open cuboid, ordered
// lexicographically; rank (a-1)(b-1)(c-1).
struct K0StabClass {
  WeightTriple w;
  std::vector<long long> coords;

  K0StabClass(const WeightTriple& wt, std::vector<long long> c)
      : w(wt), coords(std::move(c)) {}
  friend bool operator==(const K0StabClass& a, const K0StabClass& b) {
    return a.w == b.w && a.coords == b.coords;
  }
  K0StabClass operator-(const K0StabClass& o) const;
  K0StabClass operator+(const K0StabClass& o) const;
  K0StabClass negated() const;
};

std::vector<LElt> stab_basis(const WeightTriple& w);
IntMatrix stab_cartan(const WeightTriple& w);
IntMatrix stab_coxeter(const WeightTriple& w);

long long stab_euler_form(const K0StabClass& x, const K0StabClass& y);

// Class of a bundle expression whose base reduces into the subgroup
// generated by omega, c and (when a weight equals 2) the corresponding
// generator; throws when no reduction is found.
K0StabClass stab_class_of(const ExtBundleExpr& e);

}  // namespace svectkit
