#include <doctest.h>

#include <numeric>
#include <random>

#include "svectkit/tubular.hpp"

using namespace svectkit;

namespace {

std::vector<TubularType> all_types() {
  return {TubularType::T236, TubularType::T244, TubularType::T333,
          TubularType::T2222};
}

}  // namespace

TEST_CASE("weight recognition and orbit counts") {
  CHECK(tubular_type_from_weights({2, 3, 6}) == TubularType::T236);
  CHECK(tubular_type_from_weights({6, 2, 3}) == TubularType::T236);
  CHECK(tubular_type_from_weights({2, 4, 4}) == TubularType::T244);
  CHECK(tubular_type_from_weights({3, 3, 3}) == TubularType::T333);
  CHECK(tubular_type_from_weights({2, 2, 2, 2}) == TubularType::T2222);
  CHECK_THROWS(tubular_type_from_weights({2, 3, 5}));
  CHECK(l0_orbit_count(TubularType::T236) == 6);
  CHECK(l0_orbit_count(TubularType::T244) == 8);
  CHECK(l0_orbit_count(TubularType::T333) == 9);
  CHECK(l0_orbit_count(TubularType::T2222) == 8);
}

TEST_CASE("alpha_inv at distinguished slopes") {
  CHECK(alpha_inv(TubularType::T236, Rat(0)) == Rat(-3));
  CHECK(alpha_inv(TubularType::T244, Rat(0)) == Rat(-2));
  CHECK(alpha_inv(TubularType::T333, Rat(0)) == Rat(-3, 2));
  CHECK(alpha_inv(TubularType::T2222, Rat(0)) == Rat(-4, 3));
  CHECK(alpha_inv(TubularType::T333, Rat(1, 2)) == Rat(-1));
  CHECK(alpha_inv(TubularType::T236, Rat(3)) == Rat(0));
  CHECK(alpha_inv(TubularType::T244, Rat(2)) == Rat(0));
}

TEST_CASE("alpha and alpha_inv are inverse bijections") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dn(-40, 40);
  std::uniform_int_distribution<long long> dd(1, 12);
  for (TubularType t : all_types()) {
    for (int i = 0; i < 500; ++i) {
      Rat q(dn(rng), dd(rng));
      CHECK(alpha(t, alpha_inv(t, q)) == q);
      CHECK(alpha_inv(t, alpha(t, q)) == q);
    }
    // alpha_inv is strictly increasing
    Rat prev = alpha_inv(t, Rat(-500, 7));
    for (long long k = -499; k <= 500; ++k) {
      Rat cur = alpha_inv(t, Rat(k, 7));
      CHECK(prev < cur);
      prev = cur;
    }
  }
}

TEST_CASE("factorization predicate matches the threshold") {
  for (TubularType t : all_types()) {
    for (long long n = -10; n <= 10; ++n) {
      Rat q(n, 3);
      Rat thr = alpha(t, q);
      CHECK_FALSE(tubular_factorization_predicate(t, q, thr));
      CHECK(tubular_factorization_predicate(t, q, thr + Rat(1, 1000)));
    }
  }
}

TEST_CASE("slope zero covers in weight type (2,3,6)") {
  WeightTriple w(2, 3, 6);
  for (long long r = 1; r <= 7; ++r)
    for (long long d = 0; d < r; ++d) {
      if (std::gcd(d, r) != 1) continue;
      auto cover = cover_structure_236(d, r);
      // three summand families per tau-orbit line, zero multiplicities
      // dropped (d = 0 loses one family per orbit)
      CHECK(cover.size() == (d == 0 ? 12 : 18));
      long long rank = 0, degree = 0;
      for (const auto& s : cover) {
        CHECK(s.mult > 0);
        rank += s.mult;
        degree += s.mult * s.twist.delta();
      }
      CHECK(rank == 12 * r);
      // quotienting by the rank-6r degree-6d family of slope d/r leaves
      // the co-suspended family, whose slope sits one alpha-step below
      CHECK(Rat(degree - 6 * d, rank - 6 * r) == Rat(d, r) - Rat(3));
      CHECK(Rat(d, r) - Rat(3) ==
            alpha_inv(tubular_type_from_weights({w.p[0], w.p[1], w.p[2]}),
                      Rat(d, r)));
    }
}
