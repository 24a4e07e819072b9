#include "srt/weyl.hpp"

#include <algorithm>

#include "srt/error.hpp"

namespace srt {

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

WeylOp WeylOp::constant(int num_pairs, const Rational& c) {
  WeylOp op(num_pairs);
  op.add_term(Mono(static_cast<std::size_t>(2 * num_pairs), 0), c);
  return op;
}

WeylOp WeylOp::x(int num_pairs, int a) {
  if (a < 0 || a >= num_pairs) throw InputError("coordinate index out of range");
  Mono m(static_cast<std::size_t>(2 * num_pairs), 0);
  m[static_cast<std::size_t>(a)] = 1;
  return monomial(m);
}

WeylOp WeylOp::d(int num_pairs, int a) {
  if (a < 0 || a >= num_pairs) throw InputError("coordinate index out of range");
  Mono m(static_cast<std::size_t>(2 * num_pairs), 0);
  m[static_cast<std::size_t>(num_pairs + a)] = 1;
  return monomial(m);
}

WeylOp WeylOp::monomial(const Mono& m, const Rational& c) {
  if (m.size() % 2 != 0) throw InputError("monomial needs an even number of exponents");
  WeylOp op(static_cast<int>(m.size() / 2));
  op.add_term(m, c);
  return op;
}

int WeylOp::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

std::optional<Rational> WeylOp::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0) return terms_.begin()->second;
  return std::nullopt;
}

void WeylOp::add_term(const Mono& m, const Rational& c) {
  if (m.size() != static_cast<std::size_t>(2 * n_)) throw InputError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (o.n_ != n_) throw InputError("Weyl algebras of different rank");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  if (o.n_ != n_) throw InputError("Weyl algebras of different rank");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  if (a.n_ != b.n_) throw InputError("Weyl algebras of different rank");
  const int n = a.n_;
  const auto un = static_cast<std::size_t>(n);
  WeylOp out(n);
  // d^beta x^gamma = sum_k C(beta,k) C(gamma,k) k! x^(gamma-k) d^(beta-k), per variable
  std::vector<int> kmax(un), k(un);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < un; ++v) kmax[v] = std::min(ma[un + v], mb[v]);
      std::fill(k.begin(), k.end(), 0);
      while (true) {
        Integer weight = 1;
        Mono m(2 * un);
        for (std::size_t v = 0; v < un; ++v) {
          const int beta = ma[un + v], gamma = mb[v];
          if (k[v] > 0) weight *= binomial(beta, k[v]) * binomial(gamma, k[v]) * factorial(k[v]);
          const int xe = ma[v] + gamma - k[v];
          const int de = beta - k[v] + mb[un + v];
          if (xe > 255 || de > 255) throw MathError("Weyl algebra exponent overflow");
          m[v] = static_cast<std::uint8_t>(xe);
          m[un + v] = static_cast<std::uint8_t>(de);
        }
        out.add_term(m, ca * cb * Rational(weight));
        std::size_t v = 0;
        while (v < un && k[v] == kmax[v]) k[v++] = 0;
        if (v == un) break;
        ++k[v];
      }
    }
  }
  return out;
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  // highest degree first, then lexicographically descending exponents
  std::vector<std::pair<Mono, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& p, const auto& q) {
    const int dp = mono_degree(p.first), dq = mono_degree(q.first);
    if (dp != dq) return dp > dq;
    return p.first > q.first;
  });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : items) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (int v = 0; v < n_; ++v) {
      for (int part = 0; part < 2; ++part) {
        const int e = m[static_cast<std::size_t>(part * n_ + v)];
        if (e == 0) continue;
        if (!body.empty()) body += "*";
        body += (part == 0 ? "x" : "d") + std::to_string(v + 1);
        if (e > 1) body += "^" + std::to_string(e);
      }
    }
    if (body.empty()) {
      s += srt::to_string(mag);
    } else if (mag == 1) {
      s += body;
    } else {
      s += srt::to_string(mag) + "*" + body;
    }
  }
  return s;
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

WeylOp normal_order(const std::vector<WeylOp>& factors) {
  if (factors.empty()) throw InputError("empty product");
  WeylOp out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

WeylOp fourier(const WeylOp& op) {
  const int n = op.num_pairs();
  const auto un = static_cast<std::size_t>(n);
  WeylOp out(n);
  for (const auto& [m, c] : op.terms()) {
    // x^a d^b -> d^a (-x)^b
    Mono da(2 * un, 0), xb(2 * un, 0);
    int sign_exp = 0;
    for (std::size_t v = 0; v < un; ++v) {
      da[un + v] = m[v];
      xb[v] = m[un + v];
      sign_exp += m[un + v];
    }
    out += WeylOp::monomial(da, sign_exp % 2 ? -c : c) * WeylOp::monomial(xb);
  }
  return out;
}

}  // namespace srt
