#pragma once

// Numerical additive Deligne-Simpson solver: find A_i in prescribed
// semisimple adjoint orbits of gl_r with A_1 + ... + A_m = 0.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "srt/parabolics.hpp"

namespace srt {

using Complex = std::complex<double>;

struct OrbitSpec {
  int r = 1;
  std::vector<std::pair<Complex, int>> eigenvalues;  // (value, multiplicity)

  Eigen::MatrixXcd diagonal() const;
  /// Sum of multiplicity^2: dimension of the centralizer of a point.
  int stabilizer_dim() const;
};

/// Throws InputError unless every multiplicity is positive and sums to r.
void validate(const OrbitSpec& s);

/// Block-constant traceless eigenvalues with consecutive differences mu^b
/// across boundary b (the epsilon-coordinates of mu), multiplicities = block
/// sizes. Exact until the final conversion to double.
OrbitSpec orbit_of_character(const ParabolicData& p, const PChar& mu);

struct DSOptions {
  std::uint64_t seed = 1;
  int restarts = 8;
  double tol = 1e-10;
  int max_iterations = 400;
  int threads = 0;  // 0: SRT_THREADS or hardware concurrency
};

struct DSSolution {
  std::vector<Eigen::MatrixXcd> matrices;
  double residual = 0;                    // ||sum A_i||_F
  std::vector<double> spectral_residuals;  // per matrix, characteristic polynomial mismatch
  bool success = false;
  int best_restart = -1;
  std::string message;
};

/// Levenberg-Marquardt on A_i = g_i Lambda_i g_i^{-1} with updates
/// g_i <- (1 + Y_i) g_i. Restarts are independent (restart j seeded from
/// (seed, j)); the best one (lowest residual, then lowest index) is returned.
DSSolution solve(const std::vector<OrbitSpec>& specs, const DSOptions& opts = {});

/// max |coefficient difference| between the characteristic polynomial of a
/// and prod (x - lambda)^mult.
double spectral_residual(const Eigen::MatrixXcd& a, const OrbitSpec& spec);

/// Linearization of (Y_i) -> sum_i [Y_i, A_i] as an r^2 x (m r^2) matrix.
Eigen::MatrixXcd sum_commutator_jacobian(const std::vector<Eigen::MatrixXcd>& a);

struct LocalDimension {
  bool determinate = false;
  int dimension = 0;
  int jacobian_rank = 0;
  int nullity = 0;
  int stabilizer_total = 0;
  int gauge = 0;
  std::vector<double> singular_values;
  std::string message;
};

/// nullity(J) - sum of stabilizer dimensions - gauge, where the gauge is
/// dim PGL_r unless all orbits are central. Singular values below
/// 1e-8 * scale count as zero, above 1e-4 * scale as nonzero; anything in
/// between makes the result indeterminate.
LocalDimension local_dimension(const std::vector<Eigen::MatrixXcd>& a, const std::vector<OrbitSpec>& specs);

/// Thread count from SRT_THREADS (if set and positive) else hardware concurrency.
int default_threads();

}  // namespace srt
