#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "srt/rep_theory.hpp"

using namespace srt;

namespace {

DominantWeight dw(std::vector<int> coeffs) {
  DominantWeight w;
  w.r = static_cast<int>(coeffs.size()) + 1;
  w.coeffs = std::move(coeffs);
  return w;
}

}  // namespace

TEST_SUITE("rep_theory") {
  TEST_CASE("Weyl dimension") {
    CHECK(weyl_dim(dw({3})) == 4);
    CHECK(weyl_dim(dw({1, 1})) == 8);
    CHECK(weyl_dim(dw({0, 0, 0})) == 1);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        long total = 0;
        for (const auto& [w, m] : character(dw({a, b}))) total += m;
        CHECK(Integer(total) == weyl_dim(dw({a, b})));
        CHECK(character(dw({a, b})) == oracle::ssyt_character(3, dw({a, b}).partition()));
      }
    }
  }

  TEST_CASE("invariant dimensions") {
    CHECK(invariant_dim({dw({1}), dw({1})}) == 1);
    CHECK(invariant_dim({dw({1}), dw({1}), dw({1}), dw({1})}) == 2);
    CHECK(invariant_dim({dw({0, 0}), dw({0, 0})}) == 1);
    CHECK(invariant_dim({dw({1, 0}), dw({1, 0})}) == 0);
    CHECK(invariant_dim({dw({1, 0}), dw({0, 1})}) == 1);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> lab(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> a2 = {lab(rng), lab(rng), lab(rng), lab(rng)};
      std::vector<DominantWeight> w2;
      for (int x : a2) w2.push_back(dw({x}));
      CHECK(invariant_dim(w2) == oracle::sl2_invariants_cg(a2));
      std::vector<std::vector<int>> a3 = {{lab(rng), lab(rng)}, {lab(rng), lab(rng)}, {lab(rng), lab(rng)}};
      std::vector<DominantWeight> w3;
      for (const auto& x : a3) w3.push_back(dw(x));
      const long n = invariant_dim(w3);
      CHECK(n == oracle::invariants_by_symmetrization(3, a3));
      std::reverse(w3.begin(), w3.end());
      CHECK(invariant_dim(w3) == n);
    }
  }

  TEST_CASE("Levi invariants") {
    CHECK(levi_mult(dw({2}), {1, 1}) == 1);
    CHECK(levi_mult(dw({0, 0}), {1, 2}) == 1);
    CHECK(levi_mult(dw({1, 0}), {1, 2}) == 0);
    for (int k = 0; k <= 10; ++k) CHECK(levi_mult(dw({2 * k}), {1, 1}) == 1);
    CHECK(levi_mult(dw({1, 1}), {1, 1, 1}) == 2);
  }

  TEST_CASE("generic representation dimension") {
    CHECK(genrep_dim(1, 3) == 4);
    CHECK(genrep_dim(2, 2) == 6);
    CHECK(genrep_dim(4, 0) == 1);
    for (int n = 1; n <= 5; ++n) {
      for (int q = 0; q <= 10; ++q) CHECK(genrep_dim(n, q) == oracle::binomial(n + q, n));
    }
  }

  TEST_CASE("invalid weights") {
    CHECK_THROWS_AS(validate(dw({-1})), InputError);
    DominantWeight bad;
    bad.r = 3;
    bad.coeffs = {1};
    CHECK_THROWS_AS(validate(bad), InputError);
  }
}
