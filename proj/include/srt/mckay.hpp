#pragma once

// The four binary polyhedral subgroups of SL_2(C) whose McKay graphs are
// star-shaped, their exact character tables, the McKay graph, and the
// weight lambda(c) attached to a class function c on the non-identity classes.
//
// Conjugacy classes are in a fixed canonical order: the identity first, then
// ascending class size, then descending (real) trace in the tautological
// representation, then order of first appearance in the closure. Each class
// is labelled by element order plus a letter ("1a", "2a", "4a", "4b", ...).

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "srt/dynkin.hpp"
#include "srt/numbers.hpp"

namespace srt {

enum class GroupKind { Quaternion8, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

GroupKind group_kind(StarType t);
StarType star_type(GroupKind kind);
std::string_view group_name(GroupKind kind);

/// Row-major 2x2 matrix (a, b; c, d).
using Mat2 = std::array<CycNumber, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y);
CycNumber mat_det(const Mat2& x);
CycNumber mat_trace(const Mat2& x);

struct ConjugacyClass {
  std::string label;
  std::vector<int> elements;
  int order = 1;       // order of each element
  int inverse = 0;     // index of the class of inverses
  CycNumber trace;     // trace in the tautological representation
  std::vector<int> power_classes;  // class of g^l for l = 0..order-1, g a representative
  int size() const { return static_cast<int>(elements.size()); }
  int representative() const { return elements.front(); }
};

struct FiniteSubgroup {
  GroupKind kind{};
  int exponent = 1;  // lcm of element orders; conductor of every character value
  std::vector<Mat2> elements;
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of elements[a] * elements[b]
  std::vector<int> inverse;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;

  int order() const { return static_cast<int>(elements.size()); }
  int identity() const { return 0; }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int class_index(std::string_view label) const;  // throws InputError
};

FiniteSubgroup build_group(GroupKind kind);

struct CharTable {
  std::vector<std::vector<CycNumber>> rows;  // rows[irrep][class]
  std::vector<int> dims;
  int trivial = 0;
  int tautological = 0;
  int num_irreps() const { return static_cast<int>(rows.size()); }
};

/// Exact character table: class-sum eigenvectors over a prime field with
/// p = 1 mod exponent, lifted to Q(zeta_exponent) through the power maps.
/// Throws MathError if the eigenspace splitting does not terminate in lines.
CharTable character_table(const FiniteSubgroup& group);

/// Multiplicity of irrep j in irrep i (x) tautological, for all i, j.
std::vector<std::vector<int>> mckay_graph(const FiniteSubgroup& group, const CharTable& table);

/// Exact Hermitian inner product of class functions.
CycNumber class_inner_product(const FiniteSubgroup& group, const std::vector<CycNumber>& a,
                              const std::vector<CycNumber>& b);

/// c : (Gamma \ {1}) -> Q, stored per conjugacy class.
struct ClassFunction {
  std::map<int, Rational> values;  // class index (never the identity) -> value
  Rational at(int cls) const;
};

/// Weight coordinates lambda_i in the simple-root basis, indexed by star vertex.
struct RootWeight {
  std::vector<Rational> coords;
};

/// Group, table, graph, and the identification of irreps with star vertices.
struct McKayData {
  FiniteSubgroup group;
  CharTable table;
  std::vector<std::vector<int>> graph;
  DynkinStar star;
  std::vector<int> vertex_irrep;  // star vertex index -> irrep index
  std::vector<int> irrep_vertex;  // irrep index -> star vertex index

  int dim_at(int vertex) const;
};

/// Builds (once, thread-safely) and returns the McKay data for a type.
const McKayData& mckay_data(StarType type);

/// Builds the star labelling from a McKay graph; throws MathError when the
/// graph is not the affine star of the expected type with the trivial
/// representation at the affinizing vertex.
DynkinStar identify_star(const std::vector<std::vector<int>>& graph, int trivial,
                         const std::vector<int>& dims, std::vector<int>& vertex_irrep);

/// Validates c against the group (no identity entry, known classes).
void validate_class_function(const FiniteSubgroup& group, const ClassFunction& c);

/// lambda(c) in Q(zeta): (1/|G|)(dim N_i + sum_{g != 1} c(g) Tr_{N_i}(g)), the
/// sum taken over elements.
std::vector<CycNumber> lambda_of_c_exact(const McKayData& data, const ClassFunction& c);

/// Orbits of the classes under g -> g^e, gcd(e, order) = 1. lambda(c) is
/// rational exactly when c is constant on every orbit.
std::vector<std::vector<int>> rational_classes(const FiniteSubgroup& g);

/// Rational lambda(c); throws MathError if a coordinate is irrational.
RootWeight lambda_of_c(const McKayData& data, const ClassFunction& c);

/// sum_i lambda_i dim N_i, computed in the cyclotomic field.
CycNumber delta_pairing(const McKayData& data, const std::vector<CycNumber>& lambda);

}  // namespace srt
