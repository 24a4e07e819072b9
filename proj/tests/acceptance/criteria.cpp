#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "../oracles/oracles.hpp"
#include "srt/ds_solver.hpp"
#include "srt/error.hpp"
#include "srt/mckay.hpp"
#include "srt/parabolics.hpp"
#include "srt/qhr.hpp"
#include "srt/rep_theory.hpp"
#include "srt/roots_quiver.hpp"
#include "srt/sra.hpp"

namespace srt::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string failure;  // first failed requirement
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      failure = "FAILED: " + what;
    }
  }
};

Rational random_rational(std::mt19937_64& rng, int num = 20, int den = 12) {
  std::uniform_int_distribution<int> p(-num, num), q(1, den);
  return make_rational(p(rng), q(rng));
}

// rational = constant on Galois-conjugate classes, so that lambda(c) is rational
ClassFunction random_c(const FiniteSubgroup& g, std::mt19937_64& rng, bool rational) {
  ClassFunction c;
  if (rational) {
    for (const auto& orbit : rational_classes(g)) {
      const Rational v = random_rational(rng);
      for (int cls : orbit) {
        if (cls != 0) c.values[cls] = v;
      }
    }
    return c;
  }
  for (int cls = 1; cls < g.num_classes(); ++cls) c.values[cls] = random_rational(rng);
  return c;
}

DominantWeight weight(int r, std::vector<int> coeffs) {
  DominantWeight w;
  w.r = r;
  w.coeffs = std::move(coeffs);
  return w;
}

// 1. McKay graphs of the four groups
void mckay_graphs(Outcome& o, const Options&) {
  const std::map<StarType, std::vector<int>> expected = {
      {StarType::D4, {2, 2, 2, 2}}, {StarType::E6, {3, 3, 3}}, {StarType::E7, {2, 4, 4}}, {StarType::E8, {2, 3, 6}}};
  for (StarType t : kAllStarTypes) {
    const std::string name(star_name(t));
    const FiniteSubgroup g = build_group(group_kind(t));
    const CharTable table = character_table(g);
    const auto graph = mckay_graph(g, table);
    std::vector<int> vertex_irrep;
    const DynkinStar star = identify_star(graph, table.trivial, table.dims, vertex_irrep);
    const auto& legs = expected.at(t);
    o.require(star.legs() == legs, name + ": leg data");
    o.require(oracle::star_legs_of(graph) == legs, name + ": oracle leg analysis of the McKay graph");
    o.require(oracle::isomorphic(graph, oracle::affine_star(legs)), name + ": graph isomorphism with the affine star");
    const oracle::GroupSummary bf = oracle::brute_force_group(group_kind(t));
    std::vector<int> sizes;
    for (const auto& cls : g.classes) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    o.require(bf.order == g.order(), name + ": group order vs brute-force closure");
    o.require(bf.class_sizes == sizes, name + ": class sizes vs brute-force closure");
    // delta from the oracle Cartan kernel equals the irrep dimensions
    const auto kernel = oracle::cartan_kernel(graph);
    for (int i = 0; i < table.num_irreps(); ++i) {
      o.require(kernel[static_cast<std::size_t>(i)] == table.dims[static_cast<std::size_t>(i)], name + ": Cartan kernel vs dims");
    }
    o.detail << name << " legs";
    for (int d : star.legs()) o.detail << " " << d;
    o.detail << "; ";
  }
}

// 2. sum_i lambda(c)_i dim N_i = 1
void lambda_pairing(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 2);
  int count = 0;
  for (StarType t : kAllStarTypes) {
    const McKayData& data = mckay_data(t);
    for (int trial = 0; trial < 100; ++trial) {
      const ClassFunction c = random_c(data.group, rng, false);
      o.require(delta_pairing(data, lambda_of_c_exact(data, c)) == CycNumber(1),
                std::string(star_name(t)) + ": pairing differs from 1");
      ++count;
    }
  }
  o.detail << count << " class functions, all pairings equal 1";
}

// 3. partial vector for the toward-node orientation
void partial_formula(Outcome& o, const Options&) {
  int checked = 0;
  for (StarType t : kAllStarTypes) {
    const CMQuiver q(t);
    const DynkinStar& star = q.star();
    for (int n = 0; n <= 6; ++n) {
      const auto d = partial_vector(q, n);
      for (int v = 0; v < star.num_vertices(); ++v) {
        const StarVertex& sv = star.vertex(v);
        const Rational want = sv.leg == 0 ? Rational(-n * star.ell()) : make_rational(n * star.ell(), star.leg_length(sv.leg));
        o.require(d[static_cast<std::size_t>(v)] == want, std::string(star_name(t)) + " n=" + std::to_string(n) + " vertex " + star.label(v));
        ++checked;
      }
    }
  }
  o.detail << checked << " coordinates equal n l / d_j (node -n l)";
}

// 4. open orbit: real root and dimension count
void open_orbit(Outcome& o, const Options&) {
  for (StarType t : kAllStarTypes) {
    const CMQuiver q(t);
    const auto dl = delta(t);
    const auto legs = star_legs(t);
    std::vector<std::pair<int, int>> edges;
    {
      const auto adj = oracle::affine_star(legs);
      for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
          if (adj[i][j]) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    // the oracle star numbers leg vertices from the node outward
    std::vector<int> oracle_index(static_cast<std::size_t>(q.star().num_vertices()));
    {
      int next = 1;
      for (int j = 1; j <= static_cast<int>(legs.size()); ++j) {
        const int d = legs[static_cast<std::size_t>(j - 1)];
        for (int step = 0; step < d - 1; ++step, ++next) oracle_index[static_cast<std::size_t>(q.star().index_of(j, d - 1 - step))] = next;
      }
    }
    for (int n = 1; n <= 4; ++n) {
      std::vector<long> beta;
      for (int x : dl) beta.push_back(static_cast<long>(n) * x);
      beta[static_cast<std::size_t>(q.star().affinizing())] -= 1;
      std::vector<long> ob(beta.size());
      for (std::size_t v = 0; v < beta.size(); ++v) ob[static_cast<std::size_t>(oracle_index[v])] = beta[v];
      const std::string tag = std::string(star_name(t)) + " n=" + std::to_string(n);
      o.require(tits_form(q, beta) == 1, tag + ": tits_form(n delta - alpha_o) != 1");
      o.require(oracle::tits(edges, ob) == 1, tag + ": oracle Tits form != 1");
      const OpenOrbitAudit a = open_orbit_audit(t, n);
      const int ell = legs.back();
      o.require(a.dim_group == n * ell * n * ell - 1, tag + ": dim PGL");
      o.require(a.equal(), tag + ": dim X = " + std::to_string(a.dim_space) + " vs dim G = " + std::to_string(a.dim_group));
      if (n == 1) o.detail << star_name(t) << "/n=1: " << a.dim_space << " = " << a.dim_group << "; ";
    }
  }
}

// 5. Fourier identity
void fourier_identity(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 5);
  int cases = 0;
  for (int s = 0; s < 5; ++s) {
    const Rational mu1 = random_rational(rng);
    for (int m1 = 1; m1 <= 3; ++m1) {
      for (int m2 = 1; m2 <= 3; ++m2) {
        const int bad = fourier_identity_failures(m1, m2, mu1);
        o.require(bad == 0, "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + " mu1=" + to_string(mu1) + ": " +
                                std::to_string(bad) + " failing (i,j)");
        ++cases;
      }
    }
  }
  o.detail << cases << " (m1, m2, mu1) cases, all (i, j) equal";
}

// 6. (A mu)^g = (mu A)^g and two-step reduction, torus toy cases
void seqred(Outcome& o, const Options&) {
  struct Case {
    std::string name;
    int pairs;
    std::vector<std::vector<int>> weights;
    std::vector<Rational> chi;
    int split;
  };
  const std::vector<Case> cases = {
      {"C^2 gl1+gl1 generic chi", 2, {{1, 0}, {0, 1}}, {make_rational(3, 7), make_rational(-2, 5)}, 1},
      {"C^2 gl1+gl1 chi=0", 2, {{1, 0}, {0, 1}}, {0, 0}, 1},
      {"C^2 diagonal + trivial g2", 2, {{1, 1}}, {make_rational(1, 3)}, 1},
      {"C^3 rank-2 torus", 3, {{1, -1, 0}, {0, 1, -1}}, {make_rational(5, 4), make_rational(-1, 6)}, 1},
  };
  for (const auto& c : cases) {
    const SeqredReport rep = seqred_check(torus_moment_map(c.pairs, c.weights, c.chi), c.split, 4);
    o.require(rep.left_equals_right, c.name + ": (A mu)^g != (mu A)^g at degree " + std::to_string(rep.first_bad_degree));
    o.require(rep.two_step_matches(), c.name + ": one-step and two-step dimensions differ");
  }
  o.detail << cases.size() << " torus cases at D = 4";
}

// 7. D(C^2) by the Euler field
void euler_reduction(Outcome& o, const Options&) {
  for (const Rational& chi : {make_rational(3, 7), make_rational(-5, 2)}) {
    Reduction red(euler_moment_map(2, chi), 5);
    o.require(red.reduced_dims() == std::vector<long>{1, 4, 9, 16, 25, 36}, "graded dimensions at chi = " + to_string(chi));
    o.require(red.quotient_of_invariants_dims() == red.reduced_dims(), "A^g/(A mu)^g differs");
    const auto scalar = red.normal_form(sl2_casimir_c2()).as_constant();
    const Rational want = oracle::twisted_casimir_on_one(chi);
    o.require(scalar.has_value() && *scalar == want, "Casimir image at chi = " + to_string(chi));
    if (scalar) o.detail << "chi=" << to_string(chi) << ": Casimir " << to_string(*scalar) << " = oracle " << to_string(want) << "; ";
  }
  o.detail << "dims 1,4,9,16,25,36";
}

// 8. one new sl_2-isotype per filtration step
void peter_weyl(Outcome& o, const Options&) {
  for (int k = 0; k <= 10; ++k) {
    o.require(levi_mult(weight(2, {2 * k}), {1, 1}) == 1, "levi_mult(" + std::to_string(2 * k) + " omega_1) != 1");
  }
  Reduction red(euler_moment_map(2, make_rational(3, 7)), 5);
  for (int d = 0; d <= 5; ++d) {
    std::map<int, long> got;
    for (const Mono& m : red.standard_monomials(d)) ++got[int(m[0]) - int(m[1]) - int(m[2]) + int(m[3])];
    std::map<int, long> want;
    for (const auto& [w, mult] : character(weight(2, {2 * d}))) want[w[0] - w[1]] += mult;
    o.require(got == want, "degree " + std::to_string(d) + " is not L_" + std::to_string(2 * d));
    o.require(got[0] == levi_mult(weight(2, {2 * d}), {1, 1}), "zero weight space of degree " + std::to_string(d));
  }
  o.detail << "levi_mult(2k omega_1, (1,1)) = 1 for k <= 10; degree d carries L_2d for d <= 5";
}

// 9. rho-shift coherence
void rho_shift_coherence(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 9);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int m1 = size(rng), m2 = size(rng);
    const Rational mu1 = random_rational(rng);
    const ParabolicData p = parabolic_from_boundaries(m1 + m2, {m1});
    PChar mu;
    mu.r = m1 + m2;
    mu.add(m1, mu1);
    const auto [q, nu] = rho_shift(p, mu, 1);
    const std::string tag = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + " mu1=" + to_string(mu1);
    o.require(q.blocks == std::vector<int>{m2, m1}, tag + ": blocks not swapped");
    o.require(nu.at(m2) == -mu1 - m1 - m2, tag + ": mu2 != -mu1 - m1 - m2");
    const auto back = rho_shift(q, nu, 1);
    o.require(back.first.blocks == p.blocks && back.second == mu, tag + ": not involutive");
    // three blocks: Levi class preserved and involutive at both positions
    std::vector<int> blocks3 = {size(rng), size(rng), size(rng)};
    const ParabolicData p3 = parabolic_from_boundaries(blocks3[0] + blocks3[1] + blocks3[2], boundaries_of_blocks(blocks3));
    PChar mu3;
    mu3.r = p3.r;
    for (int b : p3.boundaries) mu3.add(b, random_rational(rng));
    for (int i = 1; i <= 2; ++i) {
      const auto [q3, nu3] = rho_shift(p3, mu3, i);
      std::vector<int> a = p3.blocks, b = q3.blocks;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      o.require(a == b, "Levi class changed");
      const auto back3 = rho_shift(q3, nu3, i);
      o.require(back3.first.blocks == p3.blocks && back3.second == mu3, "three-block shift not involutive");
    }
  }
  o.detail << "20 two-block and 20 three-block samples";
}

// 10. hyperplane audit
void hyperplane(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 10);
  for (StarType t : kAllStarTypes) {
    const FiniteSubgroup& g = mckay_data(t).group;
    for (int n = 1; n <= 3; ++n) {
      std::set<Rational> offsets;
      for (int s = 0; s < 10; ++s) {
        offsets.insert(hyperplane_audit(t, n, random_rational(rng), random_c(g, rng, true)).offset());
      }
      const std::string tag = std::string(star_name(t)) + " n=" + std::to_string(n);
      o.require(offsets.size() == 1, tag + ": offset depends on (k, c)");
      if (offsets.size() == 1) o.detail << tag << " offset " << to_string(*offsets.begin()) << "; ";
    }
  }
}

// 11. binom(n+q, n) = dim of q omega_1
void genrep(Outcome& o, const Options&) {
  for (int n = 1; n <= 5; ++n) {
    for (int q = 0; q <= 10; ++q) {
      DominantWeight w = weight(n + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
      w.coeffs[0] = q;
      const Integer b = oracle::binomial(n + q, n);
      o.require(genrep_dim(n, q) == b && weyl_dim(w) == b, "n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  o.detail << "n <= 5, q <= 10";
}

// 12. invariant_dim against the symmetrization oracle
void invariants(Outcome& o, const Options&) {
  const long limit = 10000;
  for (int r : {2, 3}) {
    std::vector<std::pair<std::vector<int>, long>> irreps;  // labels, dim
    for (int a = 0; a < limit; ++a) {
      for (int b = 0; b < (r == 2 ? 1 : limit); ++b) {
        if (a == 0 && b == 0) continue;
        const std::vector<int> labels = r == 2 ? std::vector<int>{a} : std::vector<int>{a, b};
        const long dim = weyl_dim(weight(r, labels)).get_si();
        if (dim > limit) {
          if (r == 3 && b == 0) a = static_cast<int>(limit);
          break;
        }
        irreps.emplace_back(labels, dim);
      }
    }
    std::vector<long> per_length(4, 0);
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, long)> rec = [&](std::size_t from, long dim) {
      if (!idx.empty()) {
        std::vector<DominantWeight> ws;
        std::vector<std::vector<int>> labels;
        for (std::size_t i : idx) {
          ws.push_back(weight(r, irreps[i].first));
          labels.push_back(irreps[i].first);
        }
        const long got = invariant_dim(ws);
        const long want = oracle::invariants_by_symmetrization(r, labels);
        if (got != want) {
          std::ostringstream s;
          s << "sl" << r << " input";
          for (const auto& l : labels) {
            s << " (";
            for (int x : l) s << x << ",";
            s << ")";
          }
          s << ": " << got << " vs oracle " << want;
          o.require(false, s.str());
        }
        ++per_length[idx.size() - 1];
      }
      if (idx.size() == 4) return;
      for (std::size_t i = from; i < irreps.size(); ++i) {
        if (dim * irreps[i].second > limit) continue;
        idx.push_back(i);
        rec(i, dim * irreps[i].second);
        idx.pop_back();
      }
    };
    rec(0, 1);
    long total = 0;
    for (long c : per_length) total += c;
    o.detail << "sl" << r << ": " << total << " inputs; ";
  }
}

// 13. H_{at,ak,ac} = H_{t,k,c}
void sra_scaling(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 13);
  int runs = 0;
  for (StarType t : {StarType::D4, StarType::E6}) {
    const FiniteSubgroup& g = mckay_data(t).group;
    for (int n = 1; n <= 2; ++n) {
      SRAParams p;
      p.t = random_rational(rng);
      p.k = random_rational(rng);
      p.c = random_c(g, rng, false);
      for (int b : {2, 3, 5}) {
        o.require(scaling_check(g, n, Rational(b), p),
                  std::string(group_name(g.kind)) + " n=" + std::to_string(n) + " a=" + std::to_string(b * b));
        ++runs;
      }
    }
  }
  o.detail << runs << " (group, n, a) runs";
}

// 14. Deligne-Simpson, D4 data
void deligne_simpson(Outcome& o, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 14);
  const FiniteSubgroup& g = mckay_data(StarType::D4).group;
  const MainTheoremParams params = main_theorem_params(StarType::D4, 1, random_rational(rng), random_c(g, rng, true));
  std::vector<OrbitSpec> specs;
  for (const auto& [p, mu] : params.legs) specs.push_back(orbit_of_character(p, mu));
  o.require(specs.size() == 4 && specs.front().r == 2, "D4 data is not four orbits in gl_2");
  if (!o.pass) return;
  DSOptions ds;
  ds.seed = opts.seed;
  ds.restarts = 8;
  ds.tol = 1e-10;
  ds.threads = opts.threads;
  const DSSolution sol = solve(specs, ds);
  o.require(sol.success, "solver: " + sol.message);
  const LocalDimension ld = local_dimension(sol.matrices, specs);
  o.require(ld.determinate && ld.dimension == 2, "local dimension " + std::to_string(ld.dimension) + " (" + ld.message + ")");
  std::array<std::complex<double>, 4> e;
  for (std::size_t i = 0; i < 4; ++i) e[i] = specs[i].eigenvalues.front().first;
  const auto mats = oracle::ds_2x2(e);
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  std::vector<Eigen::MatrixXcd> as;
  for (std::size_t i = 0; i < 4; ++i) {
    sum += mats[i];
    as.emplace_back(mats[i]);
    o.require(std::abs(mats[i].trace()) < 1e-12 && std::abs(mats[i].determinant() + e[i] * e[i]) < 1e-9,
              "oracle matrix " + std::to_string(i + 1) + " has the wrong spectrum");
  }
  o.require(sum.norm() < 1e-12, "oracle matrices do not sum to zero");
  const LocalDimension lo = local_dimension(as, specs);
  o.require(lo.determinate && lo.dimension == ld.dimension, "oracle point has local dimension " + std::to_string(lo.dimension));
  char buf[160];
  std::snprintf(buf, sizeof buf, "residual %.2e (restart %d), local dimension %d, oracle residual %.2e, oracle dimension %d",
                sol.residual, sol.best_restart, ld.dimension, sum.norm(), lo.dimension);
  o.detail << buf;
}

struct Criterion {
  const char* name;
  double budget;
  std::function<void(Outcome&, const Options&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"McKay graphs are the affine stars", 10, mckay_graphs},
      {"lambda(c) pairs with delta to 1", 5, lambda_pairing},
      {"partial vector equals n l / d_j", 1, partial_formula},
      {"open orbit: real root and dim X = dim PGL", 1, open_orbit},
      {"Fourier identity with mu2 = -mu1 - m1 - m2", 30, fourier_identity},
      {"(A mu)^g = (mu A)^g and two-step reduction", 10, seqred},
      {"Euler reduction of D(C^2) and Casimir scalar", 30, euler_reduction},
      {"one sl_2 isotype per filtration step", 5, peter_weyl},
      {"rho-shift coherence", 5, rho_shift_coherence},
      {"hyperplane offset is constant", 5, hyperplane},
      {"binom(n+q, n) = dim q omega_1", 1, genrep},
      {"invariant_dim matches symmetrization oracle", 60, invariants},
      {"SRA scaling a in {4, 9, 25}", 30, sra_scaling},
      {"Deligne-Simpson D4 solve and local dimension", 60, deligne_simpson},
  };
  return all;
}

}  // namespace

Result run(int id, const Options& opts) {
  if (id < 1 || id >= kNumCriteria) throw InputError("criterion id must be in 1..14 here");
  const Criterion& s = criteria()[static_cast<std::size_t>(id - 1)];
  Result r;
  r.id = id;
  r.name = s.name;
  r.budget = s.budget;
  Outcome o;
  const auto t0 = Clock::now();
  try {
    s.body(o, opts);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.pass = o.pass && r.seconds < r.budget;
  r.detail = o.pass ? o.detail.str() : o.failure;
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  if (o.pass && !r.pass) r.detail = "over time budget; " + r.detail;
  return r;
}

std::vector<Result> run_all(const Options& opts, const std::function<void(const Result&)>& on_result) {
  std::vector<Result> out;
  const auto t0 = Clock::now();
  bool all = true;
  for (int id = 1; id < kNumCriteria; ++id) {
    out.push_back(run(id, opts));
    if (on_result) on_result(out.back());
    all = all && out.back().pass;
  }
  Result last;
  last.id = kNumCriteria;
  last.name = "full check suite under 5 minutes";
  last.budget = 300;
  if (opts.cli_path.empty()) {
    last.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    last.pass = all && last.seconds < last.budget;
    last.detail = all ? "criteria 1-14 pass in-process" : "some criterion failed";
  } else {
    const std::string cmd = "\"" + opts.cli_path + "\" check --suite all > /dev/null";
    const auto t1 = Clock::now();
    const int status = std::system(cmd.c_str());
    last.seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    last.pass = code == 0 && last.seconds < last.budget;
    last.detail = "srt check --suite all exited with " + std::to_string(code);
  }
  out.push_back(last);
  if (on_result) on_result(last);
  return out;
}

std::string format_line(const Result& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.pass ? "PASS" : "FAIL", r.id);
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.2f s / %.0f s)", r.seconds, r.budget);
  std::string line = head + r.name + timing;
  if (!r.detail.empty()) line += " " + r.detail;
  return line;
}

}  // namespace srt::acceptance
