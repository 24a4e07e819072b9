#pragma once

// Quantum moment maps into Weyl algebras and quantum Hamiltonian reduction
// (A / A mu(g))^g, computed exactly on the filtration slice of Bernstein
// degree <= 2D. Reported "degree d" is half the Bernstein degree, so that the
// invariant x_i d_j has degree 1 and the graded pieces match functions on the
// associated conical variety.
//
// The diagonal part of the moment map (basis elements whose image is a
// combination of x_i d_i and a constant) grades everything by weight; the
// remaining basis elements are handled as joint kernels of their adjoint
// action.

#include <map>
#include <string>
#include <vector>

#include "srt/linalg.hpp"
#include "srt/weyl.hpp"

namespace srt {

struct LieAlgebra {
  std::vector<std::string> labels;
  /// bracket[a][b] = sum_c coeff * e_c
  std::vector<std::vector<std::map<int, Rational>>> bracket;
  int dim() const { return static_cast<int>(labels.size()); }
};

LieAlgebra gl_algebra(int m);  // basis e_ij, index i*m + j
LieAlgebra abelian_algebra(int dim);

struct MomentMap {
  int num_pairs = 0;
  LieAlgebra g;
  std::vector<WeylOp> images;  // unshifted
  std::vector<Rational> shift;

  /// images[a] - shift[a].
  WeylOp operator()(int a) const;
  /// [mu(a), mu(b)] = mu([a, b]) for all a, b, exactly.
  bool check_bracket() const;
};

/// gl_m on C^m (x) C^p, coordinates v_{i,k} at pair index i*p + k:
/// e_ij -> sum_k v_{i,k} d_{j,k} - chi delta_ij.
MomentMap gl_moment_map(int m, int p, const Rational& chi);

/// The Euler field sum_i x_i d_i - chi on C^N.
MomentMap euler_moment_map(int num_pairs, const Rational& chi);

/// A torus with basis element t acting by sum_i w[t][i] x_i d_i - chi[t].
MomentMap torus_moment_map(int num_pairs, const std::vector<std::vector<int>>& weights,
                           const std::vector<Rational>& chi);

/// The literal map e_ij -> sum_k v_{j,k} d_{i,k} - mu delta_ij on
/// C^m (x) C^p (an anti-homomorphism of gl_m).
WeylOp dphi_literal(int m, int p, int i, int j, const Rational& mu);

/// Exact reduction data on the slice of Bernstein degree <= 2D.
class Reduction {
 public:
  Reduction(MomentMap mu, int degree);

  const MomentMap& moment_map() const { return mu_; }
  int degree() const { return degree_; }

  /// Cumulative dimensions for d = 0..D.
  const std::vector<long>& reduced_dims() const { return reduced_dims_; }           // (A/A mu)^g
  const std::vector<long>& quotient_of_invariants_dims() const { return qinv_dims_; }  // A^g/(A mu)^g
  const std::vector<long>& invariant_dims() const { return invariant_dims_; }       // A^g
  const std::vector<long>& ideal_invariant_dims() const { return ideal_inv_dims_; }  // (A mu)^g
  std::vector<long> slice_dims() const;  // successive differences of reduced_dims

  /// Representatives of a basis of (A/A mu)^g, ordered by degree.
  const std::vector<WeylOp>& basis() const { return basis_; }

  /// Weight-zero standard monomials (a basis of the quotient's weight-zero
  /// part) entering at filtration level d, i.e. of Bernstein degree 2d - 1
  /// or 2d.
  std::vector<Mono> standard_monomials(int d) const;

  /// Representative of op modulo A mu(g), supported on standard monomials.
  /// op must have Bernstein degree <= 2D.
  WeylOp normal_form(const WeylOp& op) const;

  /// True iff op lies in A mu(g) (within the slice).
  bool in_left_ideal(const WeylOp& op) const;

  /// Torus weight of a monomial (one entry per diagonal basis element).
  std::vector<int> weight_of(const Mono& m) const;

 private:
  struct Block {
    std::vector<Mono> columns;  // Bernstein degree descending
    std::map<Mono, std::size_t> column_of;
    linalg::EchelonBasis<Rational> ideal;
  };

  Block& block(const std::vector<int>& weight) const;
  linalg::SparseVec<Rational> to_vec(const Block& b, const WeylOp& op) const;
  WeylOp from_vec(const Block& b, const linalg::SparseVec<Rational>& v) const;
  void compute();

  MomentMap mu_;
  int degree_;
  std::vector<int> torus_;      // diagonal basis elements
  std::vector<int> nontorus_;
  std::vector<std::vector<int>> pair_weight_;  // [torus elt][pair]
  std::vector<std::vector<int>> basis_weight_;  // weight of mu(a)
  std::vector<Mono> all_monomials_;
  mutable std::map<std::vector<int>, Block> blocks_;

  std::vector<long> reduced_dims_, qinv_dims_, invariant_dims_, ideal_inv_dims_;
  std::vector<WeylOp> basis_;
};

/// Monomials in 2N variables of total degree <= max_degree.
std::vector<Mono> monomials_up_to(int num_pairs, int max_degree);

struct SeqredReport {
  bool left_equals_right = true;  // (A mu)^g = (mu A)^g in the slice
  int first_bad_degree = -1;      // Bernstein degree of the first offending element
  std::vector<long> one_step_dims;
  std::vector<long> two_step_dims;
  bool two_step_matches() const { return one_step_dims == two_step_dims; }
  bool pass() const { return left_equals_right && two_step_matches(); }
};

/// mu must be a torus moment map; the first `split` basis elements form g1,
/// the rest g2.
SeqredReport seqred_check(const MomentMap& mu, int split, int degree);

/// The sl_2 Casimir ef + fe + h^2/2 for e = x1 d2, f = x2 d1,
/// h = x1 d1 - x2 d2 in D(C^2).
WeylOp sl2_casimir_c2();

/// The same Casimir for the twisted action e = -x^2 d + chi x, f = d,
/// h = 2 x d - chi on C[x]; normal-orders to a constant.
WeylOp sl2_casimir_twisted(const Rational& chi);

/// Checks F((dphi - mu1 Tr)(e_ij)) = -(dphi - mu2 Tr)(e_ji) with
/// mu2 = -mu1 - m1 - m2 for all i, j. Returns the number of failing pairs.
int fourier_identity_failures(int m1, int m2, const Rational& mu1);

}  // namespace srt
