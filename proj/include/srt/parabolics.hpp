#pragma once

// Parabolic subalgebras of sl_r containing the upper triangular Borel,
// characters on them in fundamental-weight coordinates, the weights
// mu_j(n, lambda), the parameter assembly for the star quivers, and the
// rho-shifted block transpositions.
//
// Fundamental weights are numbered 1..r-1 from the left. A parabolic is
// described by its boundary set B: the indices b whose f_b is NOT among the
// generators. Block sizes are the gaps between consecutive boundaries.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "srt/mckay.hpp"
#include "srt/numbers.hpp"

namespace srt {

enum class ParabolicKind { P, PPrime, PDoublePrime, PTildeDoublePrime };

std::string_view parabolic_name(ParabolicKind kind);  // "p", "p'", "p''", "p~''"
ParabolicKind parse_parabolic_kind(std::string_view s);

struct ParabolicData {
  ParabolicKind kind{};
  int s = 1;
  int r = 1;
  std::vector<int> boundaries;  // sorted, subset of 1..r-1
  std::vector<int> blocks;      // positive sizes summing to r

  /// dim G/P = (r^2 - sum m_t^2) / 2.
  int flag_dimension() const;
};

/// Parabolic with the given boundary set, kind left as P; s is informational.
ParabolicData parabolic_from_boundaries(int r, std::vector<int> boundaries);

/// Derived from the generator sets. Throws InputError unless s | r and r > 1.
ParabolicData blocks(ParabolicKind kind, int s, int r);

/// Closed-form block pattern of each kind with zero blocks dropped:
/// p: (q,...,q); p': (1, q-1, q, ...); p'': (q-1, 1, q, ...);
/// p~'': (q-1, q+1, q, ...), q = r/s. The last pattern needs s >= 2.
std::vector<int> block_pattern(ParabolicKind kind, int s, int r);

std::vector<int> boundaries_of_blocks(const std::vector<int>& blocks);

/// A character of a parabolic of sl_r: coefficients on fundamental weights.
struct PChar {
  int r = 2;
  std::map<int, Rational> coeffs;  // no zero entries

  Rational at(int b) const;
  void add(int b, const Rational& v);
  bool supported_on(const std::vector<int>& boundaries) const;
  friend bool operator==(const PChar& a, const PChar& b) { return a.r == b.r && a.coeffs == b.coeffs; }
};

/// epsilon-coordinates (traceless diagonal) of a weight and back.
std::vector<Rational> to_epsilon(const PChar& mu);
PChar from_epsilon(const std::vector<Rational>& eps);

/// mu_j(n, lambda) = sum_{i<d_j} (lambda_(j,i) - n l / d_j) omega_{n l i / d_j}.
PChar mu_leg(const DynkinStar& star, int n, const RootWeight& lambda, int leg);

struct MainTheoremParams {
  StarType type{};
  int n = 1;
  Rational k;
  ClassFunction c;
  RootWeight lambda;
  std::vector<std::pair<ParabolicData, PChar>> legs;  // one pair per leg
};

/// p_i = p(d_i, n l) with mu_leg for i < m; p_m = p'(l, n l) with
/// mu_leg(m) + n(k/2 - 1) omega_1 - (k/2) omega_n.
MainTheoremParams main_theorem_params(StarType type, int n, const Rational& k, const ClassFunction& c);

/// sigma(mu + rho) - rho for the transposition of blocks i and i+1 (1-based).
std::pair<ParabolicData, PChar> rho_shift(const ParabolicData& p, const PChar& mu, int i);

/// Transform from a character of p'(s, r) to one of p''(s, r). With q = r/s:
/// nu^1 = 0, nu^{q-1} = -mu^1 - q, nu^q = mu^1 + mu^q + q - 1, nu^i = mu^i
/// otherwise (q >= 3). For q = 2 the first two relations coincide at index
/// 1 and nu^1 = -mu^1 - 2; for q = 1 the two parabolics agree and nu = mu.
PChar prlevi2_transform(int s, int r, const PChar& mu);

/// lambda(c)_o + k(n-1)/2 - 1.
Rational genrep_hyperplane(StarType type, int n, const Rational& k, const ClassFunction& c);

bool is_nonnegative_integer(const Rational& q);

struct HyperplaneAudit {
  Rational nu_n;        // coordinate n of prlevi2_transform(mu_m)
  Rational hyperplane;  // genrep_hyperplane
  Rational offset() const { return nu_n - hyperplane; }
};

HyperplaneAudit hyperplane_audit(StarType type, int n, const Rational& k, const ClassFunction& c);

}  // namespace srt
