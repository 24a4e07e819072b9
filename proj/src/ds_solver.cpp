#include "srt/ds_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "srt/error.hpp"

namespace srt {

Eigen::MatrixXcd OrbitSpec::diagonal() const {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(r, r);
  int pos = 0;
  for (const auto& [value, mult] : eigenvalues) {
    for (int t = 0; t < mult; ++t, ++pos) d(pos, pos) = value;
  }
  return d;
}

int OrbitSpec::stabilizer_dim() const {
  int s = 0;
  for (const auto& [value, mult] : eigenvalues) s += mult * mult;
  return s;
}

void validate(const OrbitSpec& s) {
  if (s.r < 1) throw InputError("orbit rank r must be positive");
  int total = 0;
  for (const auto& [value, mult] : s.eigenvalues) {
    if (mult <= 0) throw InputError("eigenvalue multiplicities must be positive");
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw InputError("eigenvalues must be finite");
    total += mult;
  }
  if (total != s.r) throw InputError("eigenvalue multiplicities must sum to r = " + std::to_string(s.r));
}

OrbitSpec orbit_of_character(const ParabolicData& p, const PChar& mu) {
  if (mu.r != p.r) throw InputError("character rank does not match the parabolic");
  if (!mu.supported_on(p.boundaries)) throw InputError("character is not supported on the Levi block boundaries");
  const std::vector<Rational> eps = to_epsilon(mu);
  OrbitSpec out;
  out.r = p.r;
  std::size_t start = 0;
  for (int size : p.blocks) {
    out.eigenvalues.emplace_back(Complex(to_double(eps[start]), 0.0), size);
    start += static_cast<std::size_t>(size);
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("SRT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Eigen::MatrixXcd sum_commutator_jacobian(const std::vector<Eigen::MatrixXcd>& a) {
  if (a.empty()) return {};
  const Eigen::Index r = a.front().rows();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(r * r, static_cast<Eigen::Index>(a.size()) * r * r);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& m = a[i];
    for (Eigen::Index p = 0; p < r; ++p) {
      for (Eigen::Index q = 0; q < r; ++q) {
        // [E_pq, A] = E_pq A - A E_pq
        const Eigen::Index col = static_cast<Eigen::Index>(i) * r * r + q * r + p;
        for (Eigen::Index b = 0; b < r; ++b) j(b * r + p, col) += m(q, b);
        for (Eigen::Index c = 0; c < r; ++c) j(q * r + c, col) -= m(c, p);
      }
    }
  }
  return j;
}

double spectral_residual(const Eigen::MatrixXcd& a, const OrbitSpec& spec) {
  const Eigen::Index n = a.rows();
  // Faddeev-LeVerrier: coefficients of det(x - A), c[n] = 1
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0));
  c[static_cast<std::size_t>(n)] = 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  std::vector<Complex> e = {Complex(1)};
  for (const auto& [value, mult] : spec.eigenvalues) {
    for (int t = 0; t < mult; ++t) {
      std::vector<Complex> next(e.size() + 1, Complex(0));
      for (std::size_t i = 0; i < e.size(); ++i) {
        next[i + 1] += e[i];
        next[i] -= value * e[i];
      }
      e = std::move(next);
    }
  }
  double scale = 1, diff = 0;
  for (std::size_t i = 0; i < e.size() && i < c.size(); ++i) {
    scale = std::max(scale, std::abs(e[i]));
    diff = std::max(diff, std::abs(c[i] - e[i]));
  }
  return diff / scale;
}

namespace {

struct RestartResult {
  std::vector<Eigen::MatrixXcd> matrices;
  double residual = INFINITY;
};

Eigen::MatrixXcd conjugated(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& lambda) {
  const Eigen::MatrixXcd gl = g * lambda;
  // g Lambda g^{-1} = (g^{-T} (g Lambda)^T)^T
  return g.transpose().partialPivLu().solve(gl.transpose()).transpose();
}

double cost_of(const std::vector<Eigen::MatrixXcd>& a) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(a.front().rows(), a.front().cols());
  for (const auto& m : a) s += m;
  return s.norm();
}

RestartResult run_restart(const std::vector<Eigen::MatrixXcd>& lambdas, const DSOptions& opts, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto r = lambdas.front().rows();
  const auto m = lambdas.size();
  std::vector<Eigen::MatrixXcd> g(m);
  for (auto& gi : g) {
    gi = Eigen::MatrixXcd::Identity(r, r);
    for (Eigen::Index a = 0; a < r; ++a) {
      for (Eigen::Index b = 0; b < r; ++b) gi(a, b) += Complex(normal(rng), normal(rng));
    }
  }
  auto matrices_of = [&](const std::vector<Eigen::MatrixXcd>& gs) {
    std::vector<Eigen::MatrixXcd> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = conjugated(gs[i], lambdas[i]);
    return a;
  };
  std::vector<Eigen::MatrixXcd> a = matrices_of(g);
  double cost = cost_of(a);
  double damping = 1e-3;
  const double target = opts.tol * 1e-3;
  for (int iter = 0; iter < opts.max_iterations && cost > target && std::isfinite(cost); ++iter) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(r, r);
    for (const auto& x : a) sum += x;
    const Eigen::VectorXcd f = Eigen::Map<const Eigen::VectorXcd>(sum.data(), r * r);
    const Eigen::MatrixXcd j = sum_commutator_jacobian(a);
    const Eigen::MatrixXcd jjh = j * j.adjoint();
    bool accepted = false;
    while (!accepted && damping < 1e12) {
      // minimal-norm damped step: Y = -J^H (J J^H + d)^{-1} F
      const Eigen::MatrixXcd reg = jjh + damping * Eigen::MatrixXcd::Identity(r * r, r * r);
      const Eigen::VectorXcd y = -j.adjoint() * reg.ldlt().solve(f);
      std::vector<Eigen::MatrixXcd> trial = g;
      for (std::size_t i = 0; i < m; ++i) {
        const Eigen::MatrixXcd yi =
            Eigen::Map<const Eigen::MatrixXcd>(y.data() + static_cast<Eigen::Index>(i) * r * r, r, r);
        trial[i] = g[i] + yi * g[i];
      }
      std::vector<Eigen::MatrixXcd> ta = matrices_of(trial);
      const double tc = cost_of(ta);
      if (std::isfinite(tc) && tc < cost) {
        g = std::move(trial);
        a = std::move(ta);
        cost = tc;
        damping = std::max(damping / 5, 1e-15);
        accepted = true;
      } else {
        damping *= 4;
      }
    }
    if (!accepted) break;
  }
  RestartResult out;
  out.matrices = std::move(a);
  out.residual = std::isfinite(cost) ? cost : INFINITY;
  return out;
}

}  // namespace

DSSolution solve(const std::vector<OrbitSpec>& specs, const DSOptions& opts) {
  if (specs.empty()) throw InputError("at least one orbit is required");
  if (opts.restarts < 1) throw InputError("restarts must be positive");
  if (!(opts.tol > 0)) throw InputError("tol must be positive");
  const int r = specs.front().r;
  Complex trace = 0;
  double scale = 1;
  for (const auto& s : specs) {
    validate(s);
    if (s.r != r) throw InputError("all orbits must have the same rank r");
    for (const auto& [value, mult] : s.eigenvalues) {
      trace += value * static_cast<double>(mult);
      scale = std::max(scale, std::abs(value) * mult);
    }
  }
  if (std::abs(trace) > 1e-12 * scale) throw InputError("the traces of the orbits must sum to zero");
  std::vector<Eigen::MatrixXcd> lambdas;
  for (const auto& s : specs) lambdas.push_back(s.diagonal());

  std::vector<RestartResult> results(static_cast<std::size_t>(opts.restarts));
  const int threads = std::max(1, std::min(opts.threads > 0 ? opts.threads : default_threads(), opts.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int j = next++; j < opts.restarts; j = next++) results[static_cast<std::size_t>(j)] = run_restart(lambdas, opts, j);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int best = 0;
  for (int j = 1; j < opts.restarts; ++j) {
    if (results[static_cast<std::size_t>(j)].residual < results[static_cast<std::size_t>(best)].residual) best = j;
  }
  DSSolution sol;
  sol.best_restart = best;
  sol.matrices = std::move(results[static_cast<std::size_t>(best)].matrices);
  sol.residual = results[static_cast<std::size_t>(best)].residual;
  for (std::size_t i = 0; i < specs.size(); ++i) sol.spectral_residuals.push_back(spectral_residual(sol.matrices[i], specs[i]));
  const double worst = *std::max_element(sol.spectral_residuals.begin(), sol.spectral_residuals.end());
  sol.success = sol.residual < opts.tol && worst < 100 * opts.tol;
  if (sol.success) {
    sol.message = "converged";
  } else if (sol.residual >= opts.tol) {
    sol.message = "no restart reached the tolerance (not a proof that no solution exists)";
  } else {
    sol.message = "sum vanishes but a spectrum drifted beyond 100*tol";
  }
  return sol;
}

LocalDimension local_dimension(const std::vector<Eigen::MatrixXcd>& a, const std::vector<OrbitSpec>& specs) {
  if (a.size() != specs.size() || a.empty()) throw InputError("one matrix per orbit is required");
  const Eigen::Index r = a.front().rows();
  LocalDimension out;
  const Eigen::MatrixXcd j = sum_commutator_jacobian(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j);
  const Eigen::VectorXd sv = svd.singularValues();
  double top = 1;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    out.singular_values.push_back(sv(i));
    top = std::max(top, sv(i));
  }
  int rank = 0;
  bool ambiguous = false;
  for (double s : out.singular_values) {
    if (s > 1e-4 * top) {
      ++rank;
    } else if (s > 1e-8 * top) {
      ambiguous = true;
    }
  }
  out.jacobian_rank = rank;
  out.nullity = static_cast<int>(j.cols()) - rank;
  bool all_central = true;
  for (const auto& s : specs) {
    out.stabilizer_total += s.stabilizer_dim();
    all_central = all_central && s.eigenvalues.size() == 1;
  }
  out.gauge = all_central ? 0 : static_cast<int>(r * r - 1);
  out.dimension = out.nullity - out.stabilizer_total - out.gauge;
  out.determinate = !ambiguous;
  out.message = ambiguous ? "indeterminate: no clear singular-value gap" : "ok";
  return out;
}

}  // namespace srt
