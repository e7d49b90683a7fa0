#include <doctest.h>

#include "svectkit/parse.hpp"

using namespace svectkit;

TEST_CASE("element parsing") {
  WeightTriple w(2, 3, 7);
  CHECK(parse_lelt(w, "x1") == LElt::gen(w, 0));
  CHECK(parse_lelt(w, "c") == LElt::canonical(w));
  CHECK(parse_lelt(w, "0") == LElt::zero(w));
  CHECK(parse_lelt(w, "2*x1+x2-3*x3+4*c") == LElt(w, 2, 1, -3, 4));
  CHECK(parse_lelt(w, "x2 + x3") == LElt(w, 0, 1, 1, 0));
  CHECK(parse_lelt(w, "-c") == LElt(w, 0, 0, 0, -1));
  CHECK(parse_lelt(w, "[1,2,6,-2]") == LElt::omega(w));
  CHECK(parse_lelt(w, "[0,0,0,1]") == LElt::canonical(w));
  // normal form is applied to bracket input too
  CHECK(parse_lelt(w, "[0,3,0,0]") == LElt::canonical(w));
  CHECK_THROWS(parse_lelt(w, ""));
  CHECK_THROWS(parse_lelt(w, "x4"));
  CHECK_THROWS(parse_lelt(w, "2"));          // bare integers are not elements
  CHECK_THROWS(parse_lelt(w, "x1+2"));
  CHECK_THROWS(parse_lelt(w, "[1,2,3]"));    // needs all four coordinates
}

TEST_CASE("bundle parsing") {
  WeightTriple w(3, 4, 5);
  CHECK(parse_bundle(w, "E") == ExtBundleExpr::auslander(w));
  CHECK(parse_bundle(w, "E(x1)") ==
        ExtBundleExpr::auslander(w, LElt::gen(w, 0)));
  CHECK(parse_bundle(w, "E<x2>") ==
        ExtBundleExpr(LElt::zero(w), LElt::gen(w, 1)));
  CHECK(parse_bundle(w, "E<x1+2*x3>(c)[3]") ==
        ExtBundleExpr(LElt::canonical(w),
                      LElt::gen(w, 0) + 2 * LElt::gen(w, 2), 3));
  CHECK(parse_bundle(w, "E[-1]") ==
        ExtBundleExpr(LElt::zero(w), LElt::zero(w), -1));
  CHECK_THROWS(parse_bundle(w, "F"));
  CHECK_THROWS(parse_bundle(w, "E<2*x1>"));  // interior outside the cuboid
  CHECK_THROWS(parse_bundle(w, "E<x1>("));
  CHECK_THROWS(parse_bundle(w, "E<x1>[a]"));
}

TEST_CASE("symbol parsing") {
  CHECK(parse_symbol("star:2,3,5") == TypeSymbol::star({2, 3, 5}));
  CHECK(parse_symbol("star:8") == TypeSymbol::star({8}));
  CHECK(parse_symbol("can:2,3,6") == TypeSymbol::canonical(2, 3, 6));
  CHECK(parse_symbol("svect:2,3,7") == TypeSymbol::stable_vect(2, 3, 7));
  CHECK(parse_symbol("extcan:2,4,5") == TypeSymbol::ext_canonical(2, 4, 5));
  CHECK(parse_symbol("nak:12,3") == TypeSymbol::nakayama(12, 3));
  CHECK_THROWS(parse_symbol("foo:1,2"));
  CHECK_THROWS(parse_symbol("svect:2,3"));
  CHECK_THROWS(parse_symbol("nak:12"));
  CHECK_THROWS(parse_symbol(""));
}

TEST_CASE("round trips through the printed forms") {
  WeightTriple w(2, 3, 7);
  for (const auto& z : {LElt::omega(w), LElt(w, 1, 2, 3, -4), LElt::zero(w)})
    CHECK(parse_lelt(w, z.str()) == z);
  for (const auto& s :
       {TypeSymbol::star({2, 3, 5}), TypeSymbol::canonical(2, 4, 4),
        TypeSymbol::stable_vect(2, 3, 9), TypeSymbol::ext_canonical(2, 4, 5),
        TypeSymbol::nakayama(11, 4)})
    CHECK(parse_symbol(s.key()) == s);
}

TEST_CASE("json form") {
  WeightTriple w(2, 3, 7);
  CHECK(lelt_json(LElt::omega(w)) == "{\"l\":[1,2,6],\"m\":-2}");
  CHECK(lelt_json(LElt::zero(w)) == "{\"l\":[0,0,0],\"m\":0}");
}
