#include "srt/qhr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "srt/error.hpp"

namespace srt {

LieAlgebra gl_algebra(int m) {
  LieAlgebra g;
  const auto um = static_cast<std::size_t>(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  g.bracket.assign(um * um, std::vector<std::map<int, Rational>>(um * um));
  // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          auto& out = g.bracket[static_cast<std::size_t>(i * m + j)][static_cast<std::size_t>(k * m + l)];
          if (j == k) out[i * m + l] += 1;
          if (l == i) out[k * m + j] -= 1;
          for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        }
      }
    }
  }
  return g;
}

LieAlgebra abelian_algebra(int dim) {
  LieAlgebra g;
  for (int a = 0; a < dim; ++a) g.labels.push_back("t" + std::to_string(a + 1));
  g.bracket.assign(static_cast<std::size_t>(dim), std::vector<std::map<int, Rational>>(static_cast<std::size_t>(dim)));
  return g;
}

WeylOp MomentMap::operator()(int a) const {
  const auto ua = static_cast<std::size_t>(a);
  return images.at(ua) - WeylOp::constant(num_pairs, shift.at(ua));
}

bool MomentMap::check_bracket() const {
  for (int a = 0; a < g.dim(); ++a) {
    for (int b = 0; b < g.dim(); ++b) {
      WeylOp rhs(num_pairs);
      for (const auto& [c, coeff] : g.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        rhs += (*this)(c) * coeff;
      }
      if (commutator((*this)(a), (*this)(b)) != rhs) return false;
    }
  }
  return true;
}

MomentMap gl_moment_map(int m, int p, const Rational& chi) {
  if (m < 1 || p < 1) throw InputError("gl moment map needs m, p >= 1");
  MomentMap mu;
  mu.num_pairs = m * p;
  mu.g = gl_algebra(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      WeylOp op(mu.num_pairs);
      for (int k = 0; k < p; ++k) op += WeylOp::x(mu.num_pairs, i * p + k) * WeylOp::d(mu.num_pairs, j * p + k);
      mu.images.push_back(std::move(op));
      mu.shift.push_back(i == j ? chi : Rational(0));
    }
  }
  return mu;
}

MomentMap euler_moment_map(int num_pairs, const Rational& chi) { return gl_moment_map(1, num_pairs, chi); }

MomentMap torus_moment_map(int num_pairs, const std::vector<std::vector<int>>& weights,
                           const std::vector<Rational>& chi) {
  if (weights.size() != chi.size()) throw InputError("one character value per torus basis element is required");
  MomentMap mu;
  mu.num_pairs = num_pairs;
  mu.g = abelian_algebra(static_cast<int>(weights.size()));
  for (std::size_t t = 0; t < weights.size(); ++t) {
    if (weights[t].size() != static_cast<std::size_t>(num_pairs)) throw InputError("torus weight vector has the wrong length");
    WeylOp op(num_pairs);
    for (int i = 0; i < num_pairs; ++i) {
      op += WeylOp::x(num_pairs, i) * WeylOp::d(num_pairs, i) * Rational(weights[t][static_cast<std::size_t>(i)]);
    }
    mu.images.push_back(std::move(op));
    mu.shift.push_back(chi[t]);
  }
  return mu;
}

WeylOp dphi_literal(int m, int p, int i, int j, const Rational& mu) {
  const int n = m * p;
  WeylOp op(n);
  for (int k = 0; k < p; ++k) op += WeylOp::x(n, j * p + k) * WeylOp::d(n, i * p + k);
  if (i == j) op -= WeylOp::constant(n, mu);
  return op;
}

std::vector<Mono> monomials_up_to(int num_pairs, int max_degree) {
  const auto nv = static_cast<std::size_t>(2 * num_pairs);
  std::vector<Mono> out;
  Mono m(nv, 0);
  // enumerate exponent vectors with total <= max_degree
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == nv) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[v] = static_cast<std::uint8_t>(e);
      rec(v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(0, max_degree);
  return out;
}

namespace {

bool degree_desc(const Mono& a, const Mono& b) {
  const int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return a < b;
}

std::vector<int> add_weights(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

Reduction::Reduction(MomentMap mu, int degree) : mu_(std::move(mu)), degree_(degree) {
  if (degree < 0) throw InputError("degree bound must be nonnegative");
  if (mu_.images.size() != static_cast<std::size_t>(mu_.g.dim()) || mu_.shift.size() != mu_.images.size()) {
    throw InputError("moment map has inconsistent sizes");
  }
  const int n = mu_.num_pairs;
  const auto un = static_cast<std::size_t>(n);
  for (int a = 0; a < mu_.g.dim(); ++a) {
    const WeylOp& op = mu_.images[static_cast<std::size_t>(a)];
    bool diagonal = true;
    std::vector<int> w(un, 0);
    for (const auto& [m, c] : op.terms()) {
      const int deg = mono_degree(m);
      if (deg == 0) continue;
      std::size_t pair = un;
      for (std::size_t i = 0; i < un; ++i) {
        if (m[i] == 1 && m[un + i] == 1) pair = i;
      }
      if (deg != 2 || pair == un || c.get_den() != 1) {
        diagonal = false;
        break;
      }
      w[pair] = static_cast<int>(c.get_num().get_si());
    }
    if (diagonal) {
      torus_.push_back(a);
      pair_weight_.push_back(w);
    } else {
      nontorus_.push_back(a);
    }
  }
  for (int a = 0; a < mu_.g.dim(); ++a) {
    const WeylOp& op = mu_.images[static_cast<std::size_t>(a)];
    std::vector<int> w(torus_.size(), 0);
    bool first = true;
    for (const auto& [m, c] : op.terms()) {
      const auto wm = weight_of(m);
      if (first) {
        w = wm;
        first = false;
      } else if (wm != w) {
        throw InputError("moment map image of " + mu_.g.labels[static_cast<std::size_t>(a)] +
                         " is not homogeneous for the diagonal part");
      }
    }
    basis_weight_.push_back(w);
  }
  if (!mu_.check_bracket()) throw MathError("moment map is not a Lie algebra homomorphism");
  all_monomials_ = monomials_up_to(n, 2 * degree_);
  compute();
}

std::vector<int> Reduction::weight_of(const Mono& m) const {
  const auto un = static_cast<std::size_t>(mu_.num_pairs);
  std::vector<int> w(torus_.size(), 0);
  for (std::size_t t = 0; t < torus_.size(); ++t) {
    for (std::size_t i = 0; i < un; ++i) w[t] += pair_weight_[t][i] * (m[i] - m[un + i]);
  }
  return w;
}

Reduction::Block& Reduction::block(const std::vector<int>& weight) const {
  auto it = blocks_.find(weight);
  if (it != blocks_.end()) return it->second;
  Block b;
  for (const auto& m : all_monomials_) {
    if (weight_of(m) == weight) b.columns.push_back(m);
  }
  std::sort(b.columns.begin(), b.columns.end(), degree_desc);
  for (std::size_t c = 0; c < b.columns.size(); ++c) b.column_of[b.columns[c]] = c;
  Block& stored = blocks_.emplace(weight, std::move(b)).first->second;
  for (int a = 0; a < mu_.g.dim(); ++a) {
    const WeylOp gen = mu_(a);
    for (const auto& f : all_monomials_) {
      if (mono_degree(f) > 2 * degree_ - 2) continue;
      if (add_weights(weight_of(f), basis_weight_[static_cast<std::size_t>(a)]) != weight) continue;
      stored.ideal.insert(to_vec(stored, WeylOp::monomial(f) * gen));
    }
  }
  return stored;
}

linalg::SparseVec<Rational> Reduction::to_vec(const Block& b, const WeylOp& op) const {
  linalg::SparseVec<Rational> v;
  for (const auto& [m, c] : op.terms()) {
    auto it = b.column_of.find(m);
    if (it == b.column_of.end()) throw MathError("element leaves the truncated weight block");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return v;
}

WeylOp Reduction::from_vec(const Block& b, const linalg::SparseVec<Rational>& v) const {
  WeylOp op(mu_.num_pairs);
  for (const auto& [c, x] : v) op.add_term(b.columns[c], x);
  return op;
}

namespace {

// Nullspace with a prefix structure: columns are ordered by ascending degree,
// so the vectors whose free column has degree <= k span the kernel restricted
// to degree <= k.
struct FilteredKernel {
  linalg::Matrix<Rational> vectors;
  std::vector<int> degrees;  // degree of each kernel vector's free column
};

FilteredKernel filtered_kernel(const linalg::Matrix<Rational>& m, const std::vector<int>& col_degree) {
  FilteredKernel out;
  const std::size_t cols = col_degree.size();
  if (m.empty()) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<Rational> v(cols, 0);
      v[c] = 1;
      out.vectors.push_back(std::move(v));
      out.degrees.push_back(col_degree[c]);
    }
    return out;
  }
  linalg::Matrix<Rational> a = m;
  const auto pivots = linalg::rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    out.vectors.push_back(std::move(v));
    out.degrees.push_back(col_degree[f]);
  }
  return out;
}

std::vector<long> cumulative_counts(const std::vector<int>& degrees, int top_degree) {
  std::vector<long> out(static_cast<std::size_t>(top_degree + 1), 0);
  for (int d : degrees) {
    for (int k = 0; k <= top_degree; ++k) {
      if (d <= 2 * k) ++out[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

}  // namespace

void Reduction::compute() {
  const std::vector<int> zero(torus_.size(), 0);
  Block& b0 = block(zero);
  const int top = degree_;

  // standard monomials of the weight-zero block, ascending degree
  std::vector<std::size_t> std_cols;
  for (std::size_t c = b0.columns.size(); c-- > 0;) {
    if (!b0.ideal.is_pivot(c)) std_cols.push_back(c);
  }
  std::vector<int> std_deg;
  for (auto c : std_cols) std_deg.push_back(mono_degree(b0.columns[c]));

  std::vector<int> pivot_deg;
  for (const auto& [c, row] : b0.ideal.rows()) pivot_deg.push_back(mono_degree(b0.columns[c]));

  // (A / A mu)^g
  {
    linalg::Matrix<Rational> m;
    for (int a : nontorus_) {
      const WeylOp& gen = mu_.images[static_cast<std::size_t>(a)];
      Block& ba = block(basis_weight_[static_cast<std::size_t>(a)]);
      const std::size_t base = m.size();
      m.resize(base + ba.columns.size(), std::vector<Rational>(std_cols.size(), 0));
      for (std::size_t j = 0; j < std_cols.size(); ++j) {
        auto v = to_vec(ba, commutator(gen, WeylOp::monomial(b0.columns[std_cols[j]])));
        ba.ideal.reduce(v);
        for (const auto& [c, x] : v) m[base + c][j] = x;
      }
    }
    const FilteredKernel ker = filtered_kernel(m, std_deg);
    reduced_dims_ = cumulative_counts(ker.degrees, top);
    for (const auto& v : ker.vectors) {
      WeylOp op(mu_.num_pairs);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) op.add_term(b0.columns[std_cols[j]], v[j]);
      }
      basis_.push_back(std::move(op));
    }
  }

  // A^g and (A mu)^g, directly on the monomial space
  {
    std::vector<std::size_t> cols(b0.columns.size());
    std::iota(cols.begin(), cols.end(), 0);
    std::reverse(cols.begin(), cols.end());  // ascending degree
    std::vector<int> col_deg;
    for (auto c : cols) col_deg.push_back(mono_degree(b0.columns[c]));
    linalg::Matrix<Rational> m;
    for (int a : nontorus_) {
      const WeylOp& gen = mu_.images[static_cast<std::size_t>(a)];
      Block& ba = block(basis_weight_[static_cast<std::size_t>(a)]);
      const std::size_t base = m.size();
      m.resize(base + ba.columns.size(), std::vector<Rational>(cols.size(), 0));
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [c, x] : to_vec(ba, commutator(gen, WeylOp::monomial(b0.columns[cols[j]])))) {
          m[base + c][j] = x;
        }
      }
    }
    const FilteredKernel inv = filtered_kernel(m, col_deg);
    invariant_dims_ = cumulative_counts(inv.degrees, top);
    ideal_inv_dims_.assign(static_cast<std::size_t>(top + 1), 0);
    for (int k = 0; k <= top; ++k) {
      // dim(I_k cap A^g_k) = dim I_k + dim A^g_k - dim(I_k + A^g_k), in b0 column coordinates
      linalg::Matrix<Rational> stacked;
      long ideal_k = 0, inv_k = 0;
      for (const auto& [c, row] : b0.ideal.rows()) {
        if (mono_degree(b0.columns[c]) > 2 * k) continue;
        std::vector<Rational> dense(b0.columns.size(), 0);
        for (const auto& [cc, x] : row) dense[cc] = x;
        stacked.push_back(std::move(dense));
        ++ideal_k;
      }
      for (std::size_t v = 0; v < inv.vectors.size(); ++v) {
        if (inv.degrees[v] > 2 * k) continue;
        std::vector<Rational> dense(b0.columns.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j) dense[cols[j]] = inv.vectors[v][j];
        stacked.push_back(std::move(dense));
        ++inv_k;
      }
      const auto sum_dim = static_cast<long>(linalg::rank(stacked));
      ideal_inv_dims_[static_cast<std::size_t>(k)] = ideal_k + inv_k - sum_dim;
    }
    qinv_dims_.resize(invariant_dims_.size());
    for (std::size_t k = 0; k < qinv_dims_.size(); ++k) qinv_dims_[k] = invariant_dims_[k] - ideal_inv_dims_[k];
  }
  if (qinv_dims_ != reduced_dims_) {
    throw MathError("A^g/(A mu)^g and (A/A mu)^g have different graded dimensions");
  }
}

std::vector<long> Reduction::slice_dims() const {
  std::vector<long> out;
  long prev = 0;
  for (long d : reduced_dims_) {
    out.push_back(d - prev);
    prev = d;
  }
  return out;
}

std::vector<Mono> Reduction::standard_monomials(int d) const {
  const Block& b0 = block(std::vector<int>(torus_.size(), 0));
  std::vector<Mono> out;
  for (std::size_t c = 0; c < b0.columns.size(); ++c) {
    if (!b0.ideal.is_pivot(c) && (mono_degree(b0.columns[c]) + 1) / 2 == d) out.push_back(b0.columns[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylOp Reduction::normal_form(const WeylOp& op) const {
  if (op.num_pairs() != mu_.num_pairs) throw InputError("operator lives in a different Weyl algebra");
  if (op.degree() > 2 * degree_) throw InputError("operator degree exceeds the truncation");
  std::map<std::vector<int>, WeylOp> parts;
  for (const auto& [m, c] : op.terms()) {
    auto [it, ins] = parts.try_emplace(weight_of(m), mu_.num_pairs);
    it->second.add_term(m, c);
  }
  WeylOp out(mu_.num_pairs);
  for (const auto& [w, part] : parts) {
    const Block& b = block(w);
    auto v = to_vec(b, part);
    b.ideal.reduce(v);
    out += from_vec(b, v);
  }
  return out;
}

bool Reduction::in_left_ideal(const WeylOp& op) const { return normal_form(op).is_zero(); }

SeqredReport seqred_check(const MomentMap& mu, int split, int degree) {
  const int dim = mu.g.dim();
  if (split < 0 || split > dim) throw InputError("split index out of range");
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (!mu.g.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].empty()) {
        throw InputError("the sequential reduction check needs a torus");
      }
    }
  }
  SeqredReport report;
  const Reduction full(mu, degree);
  report.one_step_dims = full.reduced_dims();

  // (A mu)^g versus (mu A)^g on the weight-zero slice
  {
    const std::vector<Mono> all = monomials_up_to(mu.num_pairs, 2 * degree);
    std::vector<Mono> cols;
    for (const auto& m : all) {
      const auto w = full.weight_of(m);
      if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) cols.push_back(m);
    }
    std::sort(cols.begin(), cols.end(), degree_desc);
    std::map<Mono, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    auto vec = [&](const WeylOp& op) {
      linalg::SparseVec<Rational> v;
      for (const auto& [m, c] : op.terms()) v.emplace_back(col_of.at(m), c);
      std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      return v;
    };
    linalg::EchelonBasis<Rational> left, right;
    std::vector<std::pair<WeylOp, WeylOp>> gens;
    for (int a = 0; a < dim; ++a) {
      for (const auto& f : cols) {
        if (mono_degree(f) > 2 * degree - 2) continue;
        gens.emplace_back(WeylOp::monomial(f) * mu(a), mu(a) * WeylOp::monomial(f));
      }
    }
    for (const auto& [l, r] : gens) {
      left.insert(vec(l));
      right.insert(vec(r));
    }
    for (const auto& [l, r] : gens) {
      for (const WeylOp* op : {&l, &r}) {
        const bool ok = op == &l ? right.contains(vec(*op)) : left.contains(vec(*op));
        if (!ok) {
          report.left_equals_right = false;
          const int d = op->degree();
          if (report.first_bad_degree < 0 || d < report.first_bad_degree) report.first_bad_degree = d;
        }
      }
    }
  }

  // two steps: reduce by g1, then by the image of g2 inside the result
  {
    MomentMap mu1, mu2;
    mu1.num_pairs = mu2.num_pairs = mu.num_pairs;
    mu1.g = abelian_algebra(split);
    mu2.g = abelian_algebra(dim - split);
    for (int a = 0; a < dim; ++a) {
      MomentMap& target = a < split ? mu1 : mu2;
      target.images.push_back(mu.images[static_cast<std::size_t>(a)]);
      target.shift.push_back(mu.shift[static_cast<std::size_t>(a)]);
    }
    const Reduction first(mu1, degree);
    const Reduction weights2(mu2, 0);  // only used for its weight map
    std::vector<Mono> standard;
    for (int d = 0; d <= degree; ++d) {
      for (auto& m : first.standard_monomials(d)) standard.push_back(std::move(m));
    }
    std::vector<Mono> inv;
    for (const auto& m : standard) {
      const auto w = weights2.weight_of(m);
      if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) inv.push_back(m);
    }
    std::sort(inv.begin(), inv.end(), degree_desc);
    std::map<Mono, std::size_t> col_of;
    for (std::size_t c = 0; c < inv.size(); ++c) col_of[inv[c]] = c;
    linalg::EchelonBasis<Rational> ideal;
    for (const auto& s : inv) {
      if (mono_degree(s) > 2 * degree - 2) continue;
      for (int b = 0; b < mu2.g.dim(); ++b) {
        const WeylOp nf = first.normal_form(WeylOp::monomial(s) * mu2(b));
        linalg::SparseVec<Rational> v;
        for (const auto& [m, c] : nf.terms()) {
          auto it = col_of.find(m);
          if (it == col_of.end()) throw MathError("second-stage ideal left the invariant standard monomials");
          v.emplace_back(it->second, c);
        }
        std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        ideal.insert(std::move(v));
      }
    }
    std::vector<int> degs;
    for (std::size_t c = 0; c < inv.size(); ++c) {
      if (!ideal.is_pivot(c)) degs.push_back(mono_degree(inv[c]));
    }
    report.two_step_dims = cumulative_counts(degs, degree);
  }
  return report;
}

WeylOp sl2_casimir_c2() {
  const WeylOp e = WeylOp::x(2, 0) * WeylOp::d(2, 1);
  const WeylOp f = WeylOp::x(2, 1) * WeylOp::d(2, 0);
  const WeylOp h = WeylOp::x(2, 0) * WeylOp::d(2, 0) - WeylOp::x(2, 1) * WeylOp::d(2, 1);
  return e * f + f * e + h * h * make_rational(1, 2);
}

WeylOp sl2_casimir_twisted(const Rational& chi) {
  const WeylOp x = WeylOp::x(1, 0), d = WeylOp::d(1, 0);
  const WeylOp e = -(x * x * d) + x * chi;
  const WeylOp f = d;
  const WeylOp h = x * d * Rational(2) - WeylOp::constant(1, chi);
  return e * f + f * e + h * h * make_rational(1, 2);
}

int fourier_identity_failures(int m1, int m2, const Rational& mu1) {
  const int p = m1 + m2;
  const Rational mu2 = -mu1 - m1 - m2;
  int failures = 0;
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m1; ++j) {
      if (fourier(dphi_literal(m1, p, i, j, mu1)) != -dphi_literal(m1, p, j, i, mu2)) ++failures;
    }
  }
  return failures;
}

}  // namespace srt
