#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "srt/mckay.hpp"

using namespace srt;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rational coord(const McKayData& d, const RootWeight& w, int leg, int pos) {
  return w.coords[static_cast<std::size_t>(d.star.index_of(leg, pos))];
}

}  // namespace

TEST_SUITE("mckay") {
  TEST_CASE("group orders and classes against brute-force closure") {
    for (StarType t : kAllStarTypes) {
      const McKayData& d = mckay_data(t);
      const auto oracle = oracle::brute_force_group(d.group.kind);
      CAPTURE(star_name(t));
      CHECK(d.group.order() == oracle.order);
      std::vector<int> sizes;
      for (const auto& c : d.group.classes) sizes.push_back(c.size());
      CHECK(sorted(sizes) == oracle.class_sizes);
      CHECK(d.group.classes[0].size() == 1);
      CHECK(d.group.classes[0].label == "1a");
    }
    CHECK(mckay_data(StarType::D4).group.num_classes() == 5);
    CHECK(mckay_data(StarType::E8).group.order() == 120);
    CHECK(mckay_data(StarType::E8).group.num_classes() == 9);
  }

  TEST_CASE("character table dimensions and orthogonality") {
    CHECK(sorted(mckay_data(StarType::D4).table.dims) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(sorted(mckay_data(StarType::E6).table.dims) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
    for (StarType t : kAllStarTypes) {
      const McKayData& d = mckay_data(t);
      int burnside = 0;
      for (int x : d.table.dims) burnside += x * x;
      CHECK(burnside == d.group.order());
      for (int i = 0; i < d.table.num_irreps(); ++i) {
        for (int j = 0; j < d.table.num_irreps(); ++j) {
          const CycNumber ip = class_inner_product(d.group, d.table.rows[static_cast<std::size_t>(i)],
                                                   d.table.rows[static_cast<std::size_t>(j)]);
          CHECK(ip == CycNumber(i == j ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("tautological traces match the quaternion closure") {
    for (StarType t : kAllStarTypes) {
      const McKayData& d = mckay_data(t);
      const auto oracle = oracle::brute_force_group(d.group.kind);
      std::vector<std::pair<int, long>> mine, theirs;
      for (const auto& c : d.group.classes) mine.emplace_back(c.size(), std::lround(1e6 * c.trace.to_complex().real()));
      for (std::size_t k = 0; k < oracle.class_sizes.size(); ++k) {
        theirs.emplace_back(oracle.class_sizes[k], std::lround(1e6 * oracle.class_traces[k]));
      }
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      CHECK(mine == theirs);
    }
  }

  TEST_CASE("McKay graph is the affine star with the trivial rep at o") {
    const std::vector<std::vector<int>> expected = {{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
    for (std::size_t k = 0; k < 4; ++k) {
      const StarType t = kAllStarTypes[k];
      const McKayData& d = mckay_data(t);
      CHECK(oracle::star_legs_of(d.graph) == expected[k]);
      CHECK(oracle::isomorphic(d.graph, oracle::affine_star(expected[k])));
      CHECK(d.vertex_irrep[static_cast<std::size_t>(d.star.affinizing())] == d.table.trivial);
    }
  }

  TEST_CASE("lambda(c) examples") {
    const McKayData& d = mckay_data(StarType::D4);
    const RootWeight zero = lambda_of_c(d, ClassFunction{});
    for (int leg = 1; leg <= 4; ++leg) CHECK(coord(d, zero, leg, 1) == srt::make_rational(1, 8));
    CHECK(zero.coords[0] == srt::make_rational(1, 4));

    ClassFunction central;
    central.values[d.group.class_index("2a")] = 8;
    const RootWeight w = lambda_of_c(d, central);
    for (int leg = 1; leg <= 4; ++leg) CHECK(coord(d, w, leg, 1) == srt::make_rational(9, 8));
    CHECK(w.coords[0] == srt::make_rational(-7, 4));
  }

  TEST_CASE("pairing with delta is 1 and lambda is affine-linear") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
    for (StarType t : kAllStarTypes) {
      const McKayData& d = mckay_data(t);
      const auto random = [&] {
        ClassFunction c;
        for (int cls = 1; cls < d.group.num_classes(); ++cls) c.values[cls] = make_rational(num(rng), den(rng));
        return c;
      };
      for (int trial = 0; trial < 10; ++trial) {
        const ClassFunction a = random(), b = random();
        CHECK(delta_pairing(d, lambda_of_c_exact(d, a)) == CycNumber(1));
        ClassFunction sum;
        for (int cls = 1; cls < d.group.num_classes(); ++cls) sum.values[cls] = a.at(cls) + b.at(cls);
        const auto la = lambda_of_c_exact(d, a), lb = lambda_of_c_exact(d, b), ls = lambda_of_c_exact(d, sum),
                   l0 = lambda_of_c_exact(d, {});
        for (std::size_t v = 0; v < la.size(); ++v) CHECK(ls[v] == la[v] + lb[v] - l0[v]);
      }
    }
  }

  TEST_CASE("irrational lambda is rejected") {
    const McKayData& d = mckay_data(StarType::E7);
    const auto orbits = rational_classes(d.group);
    const auto split = std::find_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() > 1; });
    REQUIRE(split != orbits.end());
    ClassFunction c;
    c.values[split->front()] = 1;
    CHECK_THROWS_AS(lambda_of_c(d, c), MathError);
    for (int cls : *split) c.values[cls] = 1;
    CHECK_NOTHROW(lambda_of_c(d, c));
  }

  TEST_CASE("invalid class functions") {
    const McKayData& d = mckay_data(StarType::D4);
    CHECK_THROWS_AS(d.group.class_index("9z"), InputError);
    ClassFunction c;
    c.values[0] = 1;
    CHECK_THROWS_AS(validate_class_function(d.group, c), InputError);
  }
}
