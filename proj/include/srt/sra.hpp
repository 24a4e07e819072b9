#pragma once

// Defining relators of H_{t,k,c}(Gamma_n), Gamma_n = S_n semidirect Gamma^n,
// as elements of the smash product C[Gamma_n] (x) T(L^n) with coefficients
// affine-linear in the parameters (t, k, c_gamma). L = C^2 with the ordered
// basis (e_1, e_2) and omega(e_1, e_2) = 1.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srt/mckay.hpp"

namespace srt {

/// (sigma, (gamma_1..gamma_n)) acting by u_l -> (gamma_l u)_{sigma(l)}.
struct WreathElement {
  std::vector<int> perm;   // sigma(l), 0-based
  std::vector<int> tuple;  // element indices into the group
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity(int n);
WreathElement wreath_mul(const FiniteSubgroup& g, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const FiniteSubgroup& g, const WreathElement& a);
/// s_{lm} gamma_l gamma_m^{-1} (0-based l != m).
WreathElement swap_twist(const FiniteSubgroup& g, int n, int l, int m, int gamma);

/// Letter (basis vector b in {0,1}, position l) of a word in T(L^n).
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

/// const + t*T + k*K + sum_cls c_cls * C_cls with cyclotomic coefficients.
struct LinExpr {
  CycNumber constant, t, k;
  std::map<int, CycNumber> c;  // by conjugacy class

  bool is_zero() const;
  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator*=(const CycNumber& s);
  friend bool operator==(const LinExpr& a, const LinExpr& b);
};

struct SRAParams {
  Rational t = 1, k = 0;
  ClassFunction c;
};

CycNumber evaluate(const LinExpr& e, const SRAParams& p);

/// Sum of terms word * g (word on the left, group element on the right).
struct SmashElement {
  std::map<std::pair<Word, WreathElement>, LinExpr> terms;
  void add(const Word& w, const WreathElement& g, const LinExpr& coeff);
  friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.terms == b.terms; }
};

using Vec2 = std::array<CycNumber, 2>;

/// omega(u, v) = u_1 v_2 - u_2 v_1.
CycNumber omega(const Vec2& u, const Vec2& v);

/// [u_l, v_m] - (right-hand side of the defining relation), 0-based l, m.
SmashElement relator(const FiniteSubgroup& g, int n, int l, int m, const Vec2& u, const Vec2& v);

/// All relators for basis vectors u, v and all l, m.
std::vector<SmashElement> relator_set(const FiniteSubgroup& g, int n);

/// Group-algebra part (empty word) of an element, evaluated at parameters.
std::map<WreathElement, CycNumber> group_part(const SmashElement& e, const SRAParams& p);

/// u_l -> b u_l applied to the (a t, a k, a c)-relators equals a times the
/// (t, k, c)-relators, a = b^2, checked symbolically and at the given
/// parameters.
bool scaling_check(const FiniteSubgroup& g, int n, const Rational& b, const SRAParams& params);

/// g R g^{-1} lies in the span of the relators (evaluated at params), for
/// every relator R.
bool equivariance_check(const FiniteSubgroup& grp, int n, const WreathElement& g, const SRAParams& params);

/// R(l, m, u, v) + R(m, l, v, u) lies in the span of the relators.
bool antisymmetry_check(const FiniteSubgroup& grp, int n, const Vec2& u, const Vec2& v, const SRAParams& params);

std::string word_to_string(const Word& w);

}  // namespace srt
