#pragma once

// Affine root data of the star diagrams and the Calogero-Moser quiver: the
// star plus a vertex s with one arrow s -> o.

#include <string>
#include <vector>

#include "srt/dynkin.hpp"
#include "srt/mckay.hpp"
#include "srt/numbers.hpp"

namespace srt {

class CMQuiver {
 public:
  /// All star edges oriented toward the node.
  explicit CMQuiver(StarType type);
  /// toward_node[e] gives the direction of star().edges()[e].
  CMQuiver(StarType type, std::vector<bool> toward_node);

  const DynkinStar& star() const { return star_; }
  int s_vertex() const { return star_.num_vertices(); }
  int num_vertices() const { return star_.num_vertices() + 1; }
  std::string label(int v) const;

  /// Arrows (tail, head) of the star part, then s -> o last.
  std::vector<std::pair<int, int>> arrows() const;
  std::vector<std::pair<int, int>> star_arrows() const;

 private:
  DynkinStar star_;
  std::vector<bool> toward_node_;
};

/// Generator of the kernel of the affine Cartan matrix built from the McKay
/// graph, normalized so that delta_o = 1. Indexed by star vertex.
std::vector<int> delta(StarType type);

/// d_i = n(-delta_i + sum over arrows a with tail i of delta_{head(a)}).
std::vector<Rational> partial_vector(const CMQuiver& q, int n);

/// alpha^CM = alpha_s + n delta, indexed by CM vertex (s last).
std::vector<int> alpha_cm(StarType type, int n);

/// chi_s = n(k/2 - 1); chi_o = lambda_o - d_o - k/2; chi_i = lambda_i - d_i.
std::vector<Rational> chi_cm(const CMQuiver& q, int n, const Rational& k, const ClassFunction& c);

/// q(beta) = sum beta_i^2 - sum over arrows beta_t beta_h. beta is indexed by
/// CM vertex; a vector of star length is padded with beta_s = 0.
long tits_form(const CMQuiver& q, std::vector<long> beta);

struct OpenOrbitAudit {
  int dim_group = 0;   // (n l)^2 - 1
  int dim_space = 0;   // sum_{i<m} dim G/P_i + dim G/P~''(l, n l)
  std::vector<int> terms;
  bool equal() const { return dim_group == dim_space; }
};

OpenOrbitAudit open_orbit_audit(StarType type, int n);

}  // namespace srt
