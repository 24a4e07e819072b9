#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "srt/ds_solver.hpp"

using namespace srt;

namespace {

OrbitSpec pm(double a) { return {2, {{Complex(a, 0), 1}, {Complex(-a, 0), 1}}}; }

std::vector<double> eigen_values(const OrbitSpec& s) {
  std::vector<double> out;
  for (const auto& [v, m] : s.eigenvalues) {
    for (int i = 0; i < m; ++i) out.push_back(v.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitSpec> specs_for(StarType t, const Rational& k, const ClassFunction& c) {
  std::vector<OrbitSpec> out;
  for (const auto& [p, mu] : main_theorem_params(t, 1, k, c).legs) out.push_back(orbit_of_character(p, mu));
  return out;
}

ClassFunction generic_c(StarType t) {
  const auto& g = mckay_data(t).group;
  ClassFunction c;
  for (const auto& orbit : rational_classes(g)) {
    if (orbit.front() == 0) continue;
    for (int cls : orbit) c.values[cls] = make_rational(static_cast<long>(orbit.front()) * 3 + 1, 11);
  }
  return c;
}

}  // namespace

TEST_SUITE("ds_solver") {
  TEST_CASE("orbit of a character") {
    const Rational a = make_rational(3, 4), b = make_rational(-5, 3);
    PChar mu;
    mu.r = 2;
    mu.add(1, a);
    const auto s2 = orbit_of_character(parabolic_from_boundaries(2, {1}), mu);
    CHECK(eigen_values(s2) == std::vector<double>{-0.375, 0.375});
    PChar zero;
    zero.r = 3;
    const auto s0 = orbit_of_character(parabolic_from_boundaries(3, {1, 2}), zero);
    for (double x : eigen_values(s0)) CHECK(x == 0.0);
    PChar mu4;
    mu4.r = 4;
    mu4.add(2, b);
    const auto s4 = orbit_of_character(parabolic_from_boundaries(4, {2}), mu4);
    const double h = to_double(b) / 2;
    auto expected = std::vector<double>{h, h, -h, -h};
    std::sort(expected.begin(), expected.end());
    const auto got = eigen_values(s4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(expected[i]));
  }

  TEST_CASE("zero orbits") {
    const std::vector<OrbitSpec> specs(3, OrbitSpec{2, {{Complex(0, 0), 2}}});
    const auto sol = solve(specs);
    CHECK(sol.success);
    CHECK(sol.residual == 0.0);
    const auto ld = local_dimension(sol.matrices, specs);
    CHECK(ld.determinate);
    CHECK(ld.dimension == 0);
  }

  TEST_CASE("four 2x2 orbits against the explicit construction") {
    const std::array<std::complex<double>, 4> e = {0.7, 0.45, 0.9, 0.35};
    const auto oracle_mats = oracle::ds_2x2(e);
    Eigen::Matrix2cd total = Eigen::Matrix2cd::Zero();
    for (const auto& m : oracle_mats) total += m;
    REQUIRE(total.norm() < 1e-12);
    std::vector<OrbitSpec> specs;
    for (const auto& x : e) specs.push_back(pm(x.real()));
    for (std::size_t i = 0; i < 4; ++i) CHECK(spectral_residual(oracle_mats[i], specs[i]) < 1e-12);

    DSOptions opts;
    opts.seed = 42;
    const auto sol = solve(specs, opts);
    REQUIRE(sol.success);
    CHECK(sol.residual < 1e-10);
    for (double s : sol.spectral_residuals) CHECK(s < 100 * opts.tol);
    const auto ld = local_dimension(sol.matrices, specs);
    CHECK(ld.determinate);
    CHECK(ld.dimension == 2);
    std::vector<Eigen::MatrixXcd> oracle_dyn(oracle_mats.begin(), oracle_mats.end());
    CHECK(local_dimension(oracle_dyn, specs).dimension == 2);
  }

  TEST_CASE("determinism across thread counts") {
    const auto specs = specs_for(StarType::D4, make_rational(1, 3), generic_c(StarType::D4));
    DSOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = solve(specs, one), b = solve(specs, four);
    CHECK(a.residual == b.residual);
    CHECK(a.best_restart == b.best_restart);
    REQUIRE(a.matrices.size() == b.matrices.size());
    for (std::size_t i = 0; i < a.matrices.size(); ++i) CHECK(a.matrices[i] == b.matrices[i]);
  }

  TEST_CASE("local dimension 2 for D4 and E6 data") {
    for (StarType t : {StarType::D4, StarType::E6}) {
      const auto specs = specs_for(t, make_rational(2, 7), generic_c(t));
      const auto sol = solve(specs);
      REQUIRE(sol.success);
      const auto ld = local_dimension(sol.matrices, specs);
      CHECK(ld.determinate);
      CHECK(ld.dimension == 2);
    }
  }

  TEST_CASE("impossible instances fail honestly") {
    const auto sol = solve({pm(1.0)});
    CHECK_FALSE(sol.success);
    CHECK(sol.message.find("not a proof") != std::string::npos);
    CHECK_THROWS_AS(validate(OrbitSpec{2, {{Complex(1, 0), 3}}}), InputError);
    CHECK_THROWS_AS(solve({pm(1.0), OrbitSpec{3, {{Complex(0, 0), 3}}}}), InputError);
  }
}
