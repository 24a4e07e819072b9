#pragma once

// Weight and character combinatorics for sl_r.
//
// A dominant weight sum a_b omega_b is also written as the partition
// lambda_t = sum_{b >= t} a_b (t = 1..r, lambda_r = 0). Weights of formal
// characters are integer vectors of length r in these epsilon-coordinates;
// all weights of one character have the same coordinate sum.

#include <map>
#include <vector>

#include "srt/numbers.hpp"

namespace srt {

struct DominantWeight {
  int r = 2;
  std::vector<int> coeffs;  // a_1..a_{r-1} >= 0

  std::vector<int> partition() const;
  static DominantWeight from_partition(const std::vector<int>& lambda);
  bool is_zero() const;
};

/// Throws InputError unless r >= 2, coeffs has r-1 nonnegative entries.
void validate(const DominantWeight& w);

using FormalCharacter = std::map<std::vector<int>, long>;

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
Integer weyl_dim(const DominantWeight& w);

/// Character of the irreducible module (Freudenthal multiplicities spread
/// over Weyl orbits). Cached per weight.
const FormalCharacter& character(const DominantWeight& w);

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b);

/// Multiplicity of the irreducible module with highest weight w in a
/// character: sum over the Weyl group of sgn(s) m(lambda + rho - s rho).
long multiplicity(const FormalCharacter& ch, int r, const std::vector<int>& highest);

/// Multiplicity of the trivial module in U_1 (x) ... (x) U_t.
long invariant_dim(const std::vector<DominantWeight>& weights);

/// Dimension of the invariants of the Levi S(GL_{m_1} x ... x GL_{m_k}).
long levi_mult(const DominantWeight& w, const std::vector<int>& blocks);

/// binom(n+q, n); checked against weyl_dim(q omega_1) for sl_{n+1}.
Integer genrep_dim(int n, int q);

}  // namespace srt
