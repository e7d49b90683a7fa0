#include "svectkit/ktheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace svectkit {

namespace {

void require_same_w(const WeightTriple& a, const WeightTriple& b) {
  if (a != b) throw std::invalid_argument("ktheory: mixed weight triples");
}

std::vector<long long> sub(const std::vector<long long>& a,
                           const std::vector<long long>& b) {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<long long> add(const std::vector<long long>& a,
                           const std::vector<long long>& b) {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

K0CohClass K0CohClass::operator-(const K0CohClass& o) const {
  require_same_w(w, o.w);
  return K0CohClass(w, sub(coords, o.coords));
}

K0CohClass K0CohClass::operator+(const K0CohClass& o) const {
  require_same_w(w, o.w);
  return K0CohClass(w, add(coords, o.coords));
}

K0StabClass K0StabClass::operator-(const K0StabClass& o) const {
  require_same_w(w, o.w);
  return K0StabClass(w, sub(coords, o.coords));
}

K0StabClass K0StabClass::operator+(const K0StabClass& o) const {
  require_same_w(w, o.w);
  return K0StabClass(w, add(coords, o.coords));
}

K0StabClass K0StabClass::negated() const {
  std::vector<long long> r(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) r[i] = -coords[i];
  return K0StabClass(w, r);
}

std::vector<LElt> coh_basis(const WeightTriple& w) {
  std::vector<LElt> basis;
  basis.push_back(LElt::zero(w));
  basis.push_back(LElt::canonical(w));
  for (int i = 0; i < 3; ++i)
    for (int li = 1; li < w.p[i]; ++li)
      basis.push_back((long long)li * LElt::gen(w, i));
  std::sort(basis.begin(), basis.end());
  return basis;
}

IntMatrix coh_euler_matrix(const WeightTriple& w) {
  auto basis = coh_basis(w);
  int n = (int)basis.size();
  LElt om = LElt::omega(w);
  IntMatrix e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e.at(i, j) = dim_S(basis[j] - basis[i]) - dim_S(basis[i] + om - basis[j]);
  return e;
}

K0CohClass class_of_line(const LElt& z) {
  const WeightTriple& w = z.w;
  auto basis = coh_basis(w);
  LElt om = LElt::omega(w);
  std::vector<long long> v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    v[i] = dim_S(z - basis[i]) - dim_S(basis[i] + om - z);
  return K0CohClass(w, solve_integral(coh_euler_matrix(w), v));
}

K0CohClass class_of_simple(const WeightTriple& w, int axis, const LElt& at) {
  return class_of_line(at) - class_of_line(at - LElt::gen(w, axis));
}

K0CohClass class_of_ordinary_simple(const WeightTriple& w, const LElt& at) {
  return class_of_line(at) - class_of_line(at - LElt::canonical(w));
}

K0CohClass class_of_bundle(const ExtBundleExpr& e) {
  ExtBundleExpr c = canonical_form(e);
  const WeightTriple& w = c.base.w;
  return class_of_line(c.base + LElt::omega(w)) +
         class_of_line(c.base + c.interior);
}

IntMatrix coh_omega_shift(const WeightTriple& w) {
  auto basis = coh_basis(w);
  int n = (int)basis.size();
  LElt om = LElt::omega(w);
  IntMatrix phi(n, n);
  for (int j = 0; j < n; ++j) {
    K0CohClass col = class_of_line(basis[j] + om);
    for (int i = 0; i < n; ++i) phi.at(i, j) = col.coords[i];
  }
  return phi;
}

long long euler_form(const K0CohClass& x, const K0CohClass& y) {
  require_same_w(x.w, y.w);
  IntMatrix e = coh_euler_matrix(x.w);
  auto ey = e.apply(y.coords);
  long long s = 0;
  for (size_t i = 0; i < ey.size(); ++i) s += x.coords[i] * ey[i];
  return s;
}

long long averaged_euler_form(const K0CohClass& x, const K0CohClass& y) {
  require_same_w(x.w, y.w);
  IntMatrix e = coh_euler_matrix(x.w);
  IntMatrix phi = coh_omega_shift(x.w);
  auto ey = e.apply(y.coords);
  std::vector<long long> v = x.coords;
  long long total = 0;
  for (long long j = 0; j < x.w.lcm(); ++j) {
    long long s = 0;
    for (size_t i = 0; i < ey.size(); ++i) s += v[i] * ey[i];
    total += s;
    v = phi.apply(v);
  }
  return total;
}

LinearForms linear_forms(const K0CohClass& x) {
  auto basis = coh_basis(x.w);
  long long rank = 0, degree = 0;
  LElt det = LElt::zero(x.w);
  bool zero = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    long long c = x.coords[i];
    if (c != 0) zero = false;
    rank += c;
    degree += c * basis[i].delta();
    det = det + c * basis[i];
  }
  if (zero) throw std::invalid_argument("linear_forms: zero class");
  std::optional<Rat> slope;
  if (rank != 0) slope = Rat(degree, rank);
  return LinearForms{rank, degree, det, slope};
}

std::vector<LElt> stab_basis(const WeightTriple& w) {
  std::vector<LElt> basis;
  for (int l1 = 0; l1 <= w.p[0] - 2; ++l1)
    for (int l2 = 0; l2 <= w.p[1] - 2; ++l2)
      for (int l3 = 0; l3 <= w.p[2] - 2; ++l3) {
        LElt x(w);
        x.l[0] = l1;
        x.l[1] = l2;
        x.l[2] = l3;
        basis.push_back(x);
      }
  std::sort(basis.begin(), basis.end());
  return basis;
}

IntMatrix stab_cartan(const WeightTriple& w) {
  auto basis = stab_basis(w);
  int n = (int)basis.size();
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = basis[i].l[0] <= basis[j].l[0] &&
                basis[i].l[1] <= basis[j].l[1] &&
                basis[i].l[2] <= basis[j].l[2];
      c.at(i, j) = le ? 1 : 0;
    }
  return c;
}

IntMatrix stab_coxeter(const WeightTriple& w) {
  IntMatrix c = stab_cartan(w);
  return (inverse_unimodular(c).transpose() * c).negated();
}

long long stab_euler_form(const K0StabClass& x, const K0StabClass& y) {
  require_same_w(x.w, y.w);
  IntMatrix c = stab_cartan(x.w);
  auto cy = c.apply(y.coords);
  long long s = 0;
  for (size_t i = 0; i < cy.size(); ++i) s += x.coords[i] * cy[i];
  return s;
}

namespace {

int cuboid_index(const std::vector<LElt>& basis, const LElt& x) {
  auto it = std::lower_bound(basis.begin(), basis.end(), x);
  if (it == basis.end() || !(*it == x))
    throw std::logic_error("stab: element not in cuboid basis");
  return (int)(it - basis.begin());
}

// Try b = sum of chosen weight-two generators + s*omega + t*c (+ cuboid y
// when simple_route).  On success fills the class vector.
std::optional<std::vector<long long>> reduce_base(
    const WeightTriple& w, const LElt& b, bool simple_route, const LElt& x,
    const std::vector<LElt>& basis, const IntMatrix& phi,
    const IntMatrix& cartan_inv) {
  std::vector<int> two_axes;
  for (int i = 0; i < 3; ++i)
    if (w.p[i] == 2) two_axes.push_back(i);
  int n2 = (int)two_axes.size();
  LElt om = LElt::omega(w);
  long long pbar = w.lcm();
  for (int mask = 0; mask < (1 << n2); ++mask) {
    LElt v = b;
    int flips = 0;
    for (int k = 0; k < n2; ++k)
      if (mask & (1 << k)) {
        v = v - LElt::gen(w, two_axes[k]);
        ++flips;
      }
    for (long long s = 0; s < pbar; ++s) {
      LElt r = v - s * om;
      bool ok;
      LElt y(w);
      if (simple_route) {
        ok = r.l[0] <= w.p[0] - 2 && r.l[1] <= w.p[1] - 2 &&
             r.l[2] <= w.p[2] - 2;
        y.l[0] = r.l[0];
        y.l[1] = r.l[1];
        y.l[2] = r.l[2];
      } else {
        ok = r.l[0] == 0 && r.l[1] == 0 && r.l[2] == 0;
      }
      if (!ok) continue;
      std::vector<long long> vec(basis.size(), 0);
      if (simple_route) {
        int j = cuboid_index(basis, y);
        for (size_t i = 0; i < basis.size(); ++i)
          vec[i] = cartan_inv.at((int)i, j);
      } else {
        vec[cuboid_index(basis, x)] = 1;
      }
      // twist by omega acts by the Coxeter matrix, a weight-two generator
      // twist is a suspension and so flips the sign, c acts trivially
      for (long long j = 0; j < s; ++j) vec = phi.apply(vec);
      if (flips % 2 == 1)
        for (auto& c : vec) c = -c;
      return vec;
    }
  }
  return std::nullopt;
}

}  // namespace

K0StabClass stab_class_of(const ExtBundleExpr& e) {
  ExtBundleExpr c = canonical_form(e);
  const WeightTriple& w = c.base.w;
  auto basis = stab_basis(w);
  // the class of a twist by s*omega: tau acts by the inverse of the
  // Coxeter matrix in the conventions used here
  IntMatrix phi = inverse_unimodular(stab_coxeter(w));
  IntMatrix cinv = inverse_unimodular(stab_cartan(w));
  LElt om = LElt::omega(w);
  LElt dom = LElt::dominant(w);

  // the object itself, and its suspension (class negated)
  struct Attempt {
    LElt base;
    LElt interior;
    int sign;
  };
  std::vector<Attempt> attempts;
  attempts.push_back({c.base, c.interior, 1});
  attempts.push_back({c.base + c.interior - om, dom - c.interior, -1});
  for (const auto& at : attempts) {
    bool simple_route = at.interior.is_zero();
    auto vec = reduce_base(w, at.base, simple_route, at.interior, basis, phi,
                           cinv);
    if (vec) {
      if (at.sign < 0)
        for (auto& v : *vec) v = -v;
      return K0StabClass(w, *vec);
    }
  }
  throw std::invalid_argument(
      "stab_class_of: base does not reduce into the shift subgroup");
}

}  // namespace svectkit
