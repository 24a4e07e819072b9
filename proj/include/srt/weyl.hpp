#pragma once

// Weyl algebra on N coordinate pairs (x_a, d_a) with [d_a, x_b] = delta_ab,
// stored in normal order (every x to the left of every d).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srt/numbers.hpp"

namespace srt {

/// Exponents (x_1..x_N, d_1..d_N).
using Mono = std::vector<std::uint8_t>;

int mono_degree(const Mono& m);

class WeylOp {
 public:
  explicit WeylOp(int num_pairs = 0) : n_(num_pairs) {}

  static WeylOp constant(int num_pairs, const Rational& c);
  static WeylOp x(int num_pairs, int a);
  static WeylOp d(int num_pairs, int a);
  static WeylOp monomial(const Mono& m, const Rational& c = 1);

  int num_pairs() const { return n_; }
  const std::map<Mono, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree: largest total exponent; -1 for zero.
  int degree() const;
  std::optional<Rational> as_constant() const;

  void add_term(const Mono& m, const Rational& c);

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rational& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }
  WeylOp operator-() const { return *this * Rational(-1); }

  /// Normal-ordered product.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);

  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

  /// e.g. "x1*d2 - 3/2"
  std::string to_string() const;

 private:
  int n_;
  std::map<Mono, Rational> terms_;
};

WeylOp commutator(const WeylOp& a, const WeylOp& b);

/// Product of a sequence of factors in the given order.
WeylOp normal_order(const std::vector<WeylOp>& factors);

/// x_a -> d_a, d_a -> -x_a, extended as an algebra homomorphism.
WeylOp fourier(const WeylOp& op);

}  // namespace srt
