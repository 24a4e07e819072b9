#include "srt/numbers.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace srt {

Rational make_rational(long num, long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  Integer num, den = 1;
  const auto slash = s.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(trim(s.substr(0, slash)), num) &&
                      parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw InputError("not a rational number: \"" + std::string(text) + "\"");
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int conductor_lcm(int a, int b) {
  const long long l = std::lcm<long long>(a, b);
  if (l > kMaxConductor) {
    throw MathError("cyclotomic conductor overflow: lcm(" + std::to_string(a) + ", " +
                    std::to_string(b) + ") exceeds 2^20");
  }
  return static_cast<int>(l);
}

namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

// Per-conductor tables: x^k mod Phi_N for 0 <= k < N.
struct CycloField {
  int conductor = 1;
  int phi = 1;
  std::vector<std::vector<Rational>> powers;
};

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, IntPoly>& poly_cache() {
  static std::map<int, IntPoly> cache;
  return cache;
}

const IntPoly& cyclotomic_locked(int n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_locked(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

const CycloField& field(int n) {
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard lock(field_mutex());
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  if (n < 1 || n > kMaxConductor) {
    throw MathError("cyclotomic conductor out of range: " + std::to_string(n));
  }
  auto f = std::make_unique<CycloField>();
  f->conductor = n;
  f->phi = euler_phi(n);
  const IntPoly& cyc = cyclotomic_locked(n);
  const int phi = f->phi;
  f->powers.assign(static_cast<std::size_t>(n), std::vector<Rational>(phi));
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->powers[k] = cur;
    // multiply by x and reduce with x^phi = -sum_{j<phi} cyc[j] x^j
    Rational top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) cur[j] -= top * Rational(static_cast<long>(cyc[j]));
    }
  }
  return *cache.emplace(n, std::move(f)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1 || n > kMaxConductor) throw MathError("cyclotomic index out of range");
  std::lock_guard lock(field_mutex());
  return cyclotomic_locked(n);
}

CycNumber::CycNumber() : conductor_(1), coeffs_(1) {}

CycNumber::CycNumber(const Rational& q) : conductor_(1), coeffs_{q} {}

CycNumber::CycNumber(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::from_poly(int conductor, const std::vector<Rational>& coeffs) {
  const CycloField& f = field(conductor);
  std::vector<Rational> out(f.phi);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const auto& pw = f.powers[j % static_cast<std::size_t>(conductor)];
    for (int t = 0; t < f.phi; ++t) {
      if (pw[t] != 0) out[t] += coeffs[j] * pw[t];
    }
  }
  return CycNumber(conductor, std::move(out));
}

CycNumber CycNumber::zeta(int conductor, long k) {
  const CycloField& f = field(conductor);
  long r = k % conductor;
  if (r < 0) r += conductor;
  return CycNumber(conductor, f.powers[static_cast<std::size_t>(r)]);
}

CycNumber CycNumber::embed(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    throw MathError("cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                    std::to_string(conductor) + ")");
  }
  const int step = conductor / conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  return from_poly(conductor, poly);
}

void CycNumber::merge_conductor(CycNumber& other) {
  if (other.conductor_ == conductor_) return;
  const int l = conductor_lcm(conductor_, other.conductor_);
  *this = embed(l);
  other = other.embed(l);
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNumber::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycNumber CycNumber::galois(long k) const {
  if (std::gcd(static_cast<long>(conductor_), k) != 1 && conductor_ > 1) {
    throw MathError("Galois exponent not coprime to the conductor");
  }
  long kk = k % conductor_;
  if (kk < 0) kk += conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(conductor_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    poly[(j * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(conductor_)] += coeffs_[j];
  }
  return from_poly(conductor_, poly);
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
    z += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  CycNumber o = other;
  merge_conductor(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  CycNumber o = other;
  merge_conductor(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  CycNumber o = other;
  merge_conductor(o);
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = from_poly(conductor_, prod);
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw MathError("division by zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (conductor_ == 1) return CycNumber(Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this matrix) x = e_0 by Gauss-Jordan.
  const std::size_t phi = coeffs_.size();
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  CycNumber basis = CycNumber(Rational(1)).embed(conductor_);
  const CycNumber z = zeta(conductor_);
  for (std::size_t col = 0; col < phi; ++col) {
    CycNumber img = *this * basis;
    for (std::size_t row = 0; row < phi; ++row) m[row][col] = img.coeffs_[row];
    basis *= z;
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t piv = c;
    while (piv < phi && m[piv][c] == 0) ++piv;
    if (piv == phi) throw MathError("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j <= phi; ++j) m[c][j] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j <= phi; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t r = 0; r < phi; ++r) x[r] = m[r][phi];
  return CycNumber(conductor_, std::move(x));
}

CycNumber& CycNumber::operator/=(const CycNumber& other) {
  if (other.is_zero()) throw MathError("division by zero");
  return *this *= other.inverse();
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  CycNumber x = a, y = b;
  x.merge_conductor(y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j].get_str();
    if (j > 0) os << "*z" << conductor_ << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace srt
