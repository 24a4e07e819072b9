#pragma once

// Independent reference computations used only by tests and the acceptance
// suite. Nothing here calls into the algorithms it is used to check.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "srt/mckay.hpp"
#include "srt/numbers.hpp"

namespace srt::oracle {

/// Group closure of explicit unit-quaternion generators in double precision.
struct GroupSummary {
  int order = 0;
  std::vector<int> class_sizes;  // sorted ascending
  std::vector<double> class_traces;  // real trace per class, same order
};
GroupSummary brute_force_group(GroupKind kind);

/// Adjacency of the affine star with the given legs; vertex 0 is the node.
std::vector<std::vector<int>> affine_star(const std::vector<int>& legs);

/// Leg lengths d_j (arm length + 1) of a star-shaped tree, sorted; empty if
/// the graph is not a star with a single branch vertex.
std::vector<int> star_legs_of(const std::vector<std::vector<int>>& adjacency);

/// Backtracking graph isomorphism test on 0/1 adjacency matrices.
bool isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

/// Kernel generator of the affine Cartan matrix 2 - A by fraction-free
/// elimination, normalized to have smallest entry 1.
std::vector<long> cartan_kernel(const std::vector<std::vector<int>>& adjacency);

/// Tits form from an explicit edge list.
long tits(const std::vector<std::pair<int, int>>& edges, const std::vector<long>& beta);

/// Binomial coefficient by Pascal's rule.
Integer binomial(int n, int k);

/// Character of the sl_r module with partition lambda (length r) as
/// contents of semistandard tableaux with entries 1..r.
using PackedCharacter = std::map<std::vector<int>, long>;
PackedCharacter ssyt_character(int r, const std::vector<int>& lambda);

/// Dimension of invariants in a tensor product of sl_r modules given by
/// Dynkin labels: the alternating sum over S_r of the multiplicities of
/// c + rho - w(rho) in the product of tableau characters.
long invariants_by_symmetrization(int r, const std::vector<std::vector<int>>& labels);

/// Iterated Clebsch-Gordan count for sl_2 (labels a_i).
long sl2_invariants_cg(const std::vector<int>& labels);

/// Casimir ef + fe + h^2/2 of e = -x^2 d + chi x, f = d, h = 2 x d - chi
/// applied to the polynomial 1 by explicit polynomial arithmetic.
Rational twisted_casimir_on_one(const Rational& chi);

/// Explicit solution of A_1 + A_2 + A_3 + A_4 = 0 with A_i traceless 2x2 of
/// eigenvalues +-e_i, from the trace/determinant equations.
std::vector<Eigen::Matrix2cd> ds_2x2(const std::array<std::complex<double>, 4>& e);

}  // namespace srt::oracle
