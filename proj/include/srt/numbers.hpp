#pragma once

// Exact scalars: GMP-backed rationals and elements of cyclotomic fields
// Q(zeta_N) stored in the power basis modulo the N-th cyclotomic polynomial.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srt/error.hpp"

namespace srt {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical string form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Largest conductor accepted by CycNumber arithmetic.
inline constexpr int kMaxConductor = 1 << 20;

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

class CycNumber {
 public:
  /// Zero in Q = Q(zeta_1).
  CycNumber();
  CycNumber(const Rational& q);  // NOLINT: rationals embed implicitly
  CycNumber(long v) : CycNumber(Rational(v)) {}  // NOLINT

  /// zeta_N^k.
  static CycNumber zeta(int conductor, long k = 1);

  /// Builds sum_j coeffs[j] zeta_N^j; any length is accepted and reduced.
  static CycNumber from_poly(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const { return conductor_; }

  /// Power-basis coordinates, length phi(conductor).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same number viewed in Q(zeta_N); N must be a multiple of conductor().
  CycNumber embed(int conductor) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> to_rational() const;

  /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycNumber galois(long k) const;
  CycNumber conj() const { return galois(-1); }
  CycNumber inverse() const;

  /// Value under the embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;

  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator/=(const CycNumber& other);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2 + 3*z12^2".
  std::string to_string() const;

 private:
  CycNumber(int conductor, std::vector<Rational> coeffs);
  void merge_conductor(CycNumber& other);

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Least common multiple of two conductors; throws MathError above kMaxConductor.
int conductor_lcm(int a, int b);

}  // namespace srt
