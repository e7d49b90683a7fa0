#include "svectkit/checks.hpp"

#include <random>

#include "svectkit/bundles.hpp"
#include "svectkit/coxzoo.hpp"
#include "svectkit/ktheory.hpp"
#include "svectkit/tubular.hpp"

namespace svectkit {

namespace {

std::vector<WeightTriple> sample_triples() {
  return {WeightTriple(2, 2, 2), WeightTriple(2, 2, 5), WeightTriple(2, 3, 5),
          WeightTriple(2, 3, 7), WeightTriple(3, 3, 3), WeightTriple(3, 4, 5)};
}

LElt rand_elt(const WeightTriple& w, std::mt19937& rng) {
  std::uniform_int_distribution<int> dn(-15, 15);
  std::uniform_int_distribution<int> dm(-4, 4);
  return LElt(w, dn(rng), dn(rng), dn(rng), dm(rng));
}

std::vector<LElt> cuboid_points(const WeightTriple& w) {
  return stab_basis(w);
}

}  // namespace

CheckResult check_picard() {
  CheckResult out;
  std::mt19937 rng(2024);
  bool dichotomy = true, hom_deg = true, serre = true;
  for (const auto& w : sample_triples()) {
    LElt bound = LElt::canonical(w) + LElt::omega(w);
    for (int t = 0; t < 400; ++t) {
      LElt x = rand_elt(w, rng), y = rand_elt(w, rng);
      if (is_effective(x) == leq(x, bound)) dichotomy = false;
      if ((x + y).delta() != x.delta() + y.delta()) hom_deg = false;
      if (ext_dim(x, y) != hom_dim(y, x + LElt::omega(w))) serre = false;
    }
  }
  out.push_back({"effectivity dichotomy", dichotomy});
  out.push_back({"degree map additive", hom_deg});
  out.push_back({"ext via Serre duality", serre});
  return out;
}

CheckResult check_bundles() {
  CheckResult out;
  bool susp_sq = true, dual_inv = true, refl_inv = true, cuboid_sq = true,
       det_sum = true, shom_diag = true;
  for (const auto& w : sample_triples()) {
    LElt c = LElt::canonical(w);
    for (const auto& x : cuboid_points(w)) {
      ExtBundleExpr e(LElt::zero(w), x);
      if (!same_object(suspend(e, 2), twist(e, c))) susp_sq = false;
      if (!same_object(dualize(dualize(e)), e)) dual_inv = false;
      if (!same_object(reflect(reflect(e)), e)) refl_inv = false;
      for (int axis = 0; axis < 3; ++axis)
        if (!same_object(cuboid_symmetry(cuboid_symmetry(e, axis), axis), e))
          cuboid_sq = false;
      // dets of inj hull summands minus det of E give det of E[1]
      auto h = hulls(e);
      LElt s = LElt::zero(w);
      for (const auto& t : h.injective_twists) s = s + t;
      if (s - det_of(e) != det_of(suspend(e, 1))) det_sum = false;
      auto d = shom_dims(e, ExtBundleExpr::auslander(w, x));
      auto dd = shom_dims(ExtBundleExpr::auslander(w), e);
      if (!d || !dd) shom_diag = false;
    }
  }
  out.push_back({"double suspension is twist by c", susp_sq});
  out.push_back({"dualize is involutive", dual_inv});
  out.push_back({"reflection is involutive", refl_inv});
  out.push_back({"cuboid symmetry is involutive", cuboid_sq});
  out.push_back({"hull determinant bookkeeping", det_sum});
  out.push_back({"stable homs computable on Auslander shapes", shom_diag});
  return out;
}

CheckResult check_ktheory() {
  CheckResult out;
  bool unimod = true, ranks = true, pairing = true;
  for (const auto& w : sample_triples()) {
    BigInt d = det_exact(coh_euler_matrix(w));
    if (d != 1 && d != -1) unimod = false;
    if ((int)coh_basis(w).size() != w.p[0] + w.p[1] + w.p[2] - 1)
      ranks = false;
    if ((int)stab_basis(w).size() !=
        (w.p[0] - 1) * (w.p[1] - 1) * (w.p[2] - 1))
      ranks = false;
    for (const auto& x : stab_basis(w)) {
      K0StabClass px = stab_class_of(ExtBundleExpr(LElt::zero(w), x));
      for (const auto& y : stab_basis(w)) {
        K0StabClass sy = stab_class_of(ExtBundleExpr::auslander(w, y));
        long long expect = (x == y) ? 1 : 0;
        if (stab_euler_form(px, sy) != expect) pairing = false;
      }
    }
  }
  out.push_back({"coherent Euler matrix unimodular", unimod});
  out.push_back({"K0 ranks", ranks});
  out.push_back({"projective/simple pairing", pairing});
  return out;
}

CheckResult check_coxzoo() {
  CheckResult out;
  bool degrees = true, selfrec = true, windows = true;
  for (int a = 2; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int c = b; c <= 6; ++c) {
        auto s = TypeSymbol::stable_vect(a, b, c);
        if (coxpol(s).degree() != s.k0_rank()) degrees = false;
        auto win = orlov_trichotomy(WeightTriple(a, b, c));
        long long g = invariants_of_triple(WeightTriple(a, b, c)).gorenstein;
        if ((long long)win.window.size() != (g > 0 ? g : -g)) windows = false;
      }
  // a Nakayama algebra always matches itself through its own polynomial
  for (int n = 3; n <= 10; ++n)
    if (coxpol(TypeSymbol::nakayama(n, 2)) !=
        coxpol(TypeSymbol::star({n})))
      selfrec = false;
  out.push_back({"stable coxpol degrees", degrees});
  out.push_back({"orlov window sizes", windows});
  out.push_back({"nilpotency-2 Nakayama is the linear quiver", selfrec});
  return out;
}

CheckResult check_tubular() {
  CheckResult out;
  bool inverse = true, covers = true;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dn(-40, 40);
  std::uniform_int_distribution<int> dd(1, 12);
  for (auto t : {TubularType::T236, TubularType::T244, TubularType::T333,
                 TubularType::T2222})
    for (int i = 0; i < 500; ++i) {
      Rat q(dn(rng), dd(rng));
      if (alpha(t, alpha_inv(t, q)) != q) inverse = false;
      if (alpha_inv(t, alpha(t, q)) != q) inverse = false;
    }
  for (long long r = 1; r <= 8; ++r)
    for (long long d = 0; d < r; ++d) {
      if (std::gcd(d, r) != 1) continue;
      auto cov = cover_structure_236(d, r);
      long long rank = 0, deg = 0;
      for (const auto& s : cov) {
        rank += s.mult;
        deg += s.mult * s.twist.delta();
      }
      // P has rank 12r; S_q has rank 6r and degree 6d, so S[-1] has slope
      // q - 3
      if (rank != 12 * r) covers = false;
      long long rk_s1 = rank - 6 * r, deg_s1 = deg - 6 * d;
      if (Rat(deg_s1, rk_s1) != Rat(d, r) - Rat(3)) covers = false;
    }
  out.push_back({"alpha and alpha_inv are mutually inverse", inverse});
  out.push_back({"cover rank and slope bookkeeping", covers});
  return out;
}

}  // namespace svectkit
