#include "srt/parabolics.hpp"

#include <algorithm>
#include <set>

#include "srt/error.hpp"

namespace srt {

std::string_view parabolic_name(ParabolicKind kind) {
  switch (kind) {
    case ParabolicKind::P: return "p";
    case ParabolicKind::PPrime: return "p'";
    case ParabolicKind::PDoublePrime: return "p''";
    case ParabolicKind::PTildeDoublePrime: return "p~''";
  }
  return "?";
}

ParabolicKind parse_parabolic_kind(std::string_view s) {
  for (auto k : {ParabolicKind::P, ParabolicKind::PPrime, ParabolicKind::PDoublePrime,
                 ParabolicKind::PTildeDoublePrime}) {
    if (s == parabolic_name(k)) return k;
  }
  throw InputError("unknown parabolic kind \"" + std::string(s) + "\"");
}

int ParabolicData::flag_dimension() const {
  int sq = 0;
  for (int m : blocks) sq += m * m;
  return (r * r - sq) / 2;
}

std::vector<int> boundaries_of_blocks(const std::vector<int>& blocks) {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    acc += blocks[t];
    out.push_back(acc);
  }
  return out;
}

ParabolicData parabolic_from_boundaries(int r, std::vector<int> boundaries) {
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
  ParabolicData p;
  p.r = r;
  int prev = 0;
  for (int b : boundaries) {
    if (b <= 0 || b >= r) throw InputError("boundary " + std::to_string(b) + " outside 1.." + std::to_string(r - 1));
    p.blocks.push_back(b - prev);
    prev = b;
  }
  p.blocks.push_back(r - prev);
  p.boundaries = std::move(boundaries);
  return p;
}

ParabolicData blocks(ParabolicKind kind, int s, int r) {
  if (s <= 0 || r <= 1 || r % s != 0) {
    throw InputError("parabolic needs s | r and r > 1 (got s=" + std::to_string(s) + ", r=" + std::to_string(r) + ")");
  }
  const int q = r / s;
  // the f_i left out of the generating set
  std::set<int> excluded;
  for (int i = 1; i < r; ++i) {
    if (i % q == 0) excluded.insert(i);
  }
  switch (kind) {
    case ParabolicKind::P: break;
    case ParabolicKind::PPrime: excluded.insert(1); break;
    case ParabolicKind::PDoublePrime:
      if (q - 1 >= 1) excluded.insert(q - 1);
      break;
    case ParabolicKind::PTildeDoublePrime:
      if (q - 1 >= 1) excluded.insert(q - 1);
      excluded.erase(q);
      break;
  }
  ParabolicData p = parabolic_from_boundaries(r, {excluded.begin(), excluded.end()});
  p.kind = kind;
  p.s = s;
  return p;
}

std::vector<int> block_pattern(ParabolicKind kind, int s, int r) {
  if (s <= 0 || r <= 1 || r % s != 0) throw InputError("block pattern needs s | r and r > 1");
  const int q = r / s;
  std::vector<int> raw;
  int tail = 0;  // number of trailing full blocks of size q
  switch (kind) {
    case ParabolicKind::P: tail = s; break;
    case ParabolicKind::PPrime: raw = {1, q - 1}; tail = s - 1; break;
    case ParabolicKind::PDoublePrime: raw = {q - 1, 1}; tail = s - 1; break;
    case ParabolicKind::PTildeDoublePrime:
      if (s < 2) throw InputError("the p~'' pattern needs s >= 2");
      raw = {q - 1, q + 1};
      tail = s - 2;
      break;
  }
  for (int t = 0; t < tail; ++t) raw.push_back(q);
  std::vector<int> out;
  for (int m : raw) {
    if (m > 0) out.push_back(m);
  }
  return out;
}

Rational PChar::at(int b) const {
  auto it = coeffs.find(b);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void PChar::add(int b, const Rational& v) {
  if (b <= 0 || b >= r) throw MathError("fundamental weight index " + std::to_string(b) + " outside 1.." + std::to_string(r - 1));
  Rational& slot = coeffs[b];
  slot += v;
  if (slot == 0) coeffs.erase(b);
}

bool PChar::supported_on(const std::vector<int>& boundaries) const {
  for (const auto& [b, v] : coeffs) {
    if (!std::binary_search(boundaries.begin(), boundaries.end(), b)) return false;
  }
  return true;
}

std::vector<Rational> to_epsilon(const PChar& mu) {
  const auto r = static_cast<std::size_t>(mu.r);
  std::vector<Rational> eps(r);
  Rational acc = 0;
  for (std::size_t t = r; t-- > 0;) {
    eps[t] = acc;
    if (t > 0) acc += mu.at(static_cast<int>(t));
  }
  // eps_t = sum_{b >= t} mu^b (1-based), then remove the mean
  Rational mean = 0;
  for (const auto& e : eps) mean += e;
  mean /= static_cast<long>(r);
  for (auto& e : eps) e -= mean;
  return eps;
}

PChar from_epsilon(const std::vector<Rational>& eps) {
  PChar mu;
  mu.r = static_cast<int>(eps.size());
  for (std::size_t b = 1; b < eps.size(); ++b) mu.add(static_cast<int>(b), eps[b - 1] - eps[b]);
  return mu;
}

PChar mu_leg(const DynkinStar& star, int n, const RootWeight& lambda, int leg) {
  if (leg < 1 || leg > star.num_legs()) throw InputError("leg index out of range");
  if (n < 1) throw InputError("n must be positive");
  const int l = star.ell(), d = star.leg_length(leg);
  PChar mu;
  mu.r = n * l;
  const int step = n * l / d;
  for (int i = 1; i < d; ++i) {
    mu.add(step * i, lambda.coords.at(static_cast<std::size_t>(star.index_of(leg, i))) - step);
  }
  return mu;
}

MainTheoremParams main_theorem_params(StarType type, int n, const Rational& k, const ClassFunction& c) {
  if (n < 1) throw InputError("n must be positive");
  const McKayData& data = mckay_data(type);
  MainTheoremParams out;
  out.type = type;
  out.n = n;
  out.k = k;
  out.c = c;
  out.lambda = lambda_of_c(data, c);
  const DynkinStar& star = data.star;
  const int m = star.num_legs(), l = star.ell();
  for (int j = 1; j <= m; ++j) {
    PChar mu = mu_leg(star, n, out.lambda, j);
    if (j < m) {
      out.legs.emplace_back(blocks(ParabolicKind::P, star.leg_length(j), n * l), std::move(mu));
      continue;
    }
    mu.add(1, n * (k / 2 - 1));
    mu.add(n, -k / 2);
    ParabolicData pp = blocks(ParabolicKind::PPrime, l, n * l);
    if (!mu.supported_on(pp.boundaries)) {
      throw MathError("mu_m is not supported on the boundaries of p'(l, n l)");
    }
    out.legs.emplace_back(std::move(pp), std::move(mu));
  }
  return out;
}

std::pair<ParabolicData, PChar> rho_shift(const ParabolicData& p, const PChar& mu, int i) {
  const int nblocks = static_cast<int>(p.blocks.size());
  if (nblocks < 2 || i < 1 || i >= nblocks) throw InputError("rho_shift needs blocks i, i+1 with 1 <= i < #blocks");
  if (mu.r != p.r) throw InputError("character and parabolic have different rank");
  if (!mu.supported_on(p.boundaries)) throw InputError("character is not supported on the parabolic's boundaries");
  const auto r = static_cast<std::size_t>(p.r);
  std::vector<Rational> shifted = to_epsilon(mu);
  const Rational top = make_rational(p.r + 1, 2);
  for (std::size_t t = 0; t < r; ++t) shifted[t] += top - static_cast<long>(t + 1);

  std::size_t start = 0;
  for (int b = 0; b < i - 1; ++b) start += static_cast<std::size_t>(p.blocks[static_cast<std::size_t>(b)]);
  const auto a = static_cast<std::size_t>(p.blocks[static_cast<std::size_t>(i - 1)]);
  const auto b = static_cast<std::size_t>(p.blocks[static_cast<std::size_t>(i)]);
  std::rotate(shifted.begin() + static_cast<long>(start), shifted.begin() + static_cast<long>(start + a),
              shifted.begin() + static_cast<long>(start + a + b));
  for (std::size_t t = 0; t < r; ++t) shifted[t] -= top - static_cast<long>(t + 1);

  std::vector<int> new_blocks = p.blocks;
  std::swap(new_blocks[static_cast<std::size_t>(i - 1)], new_blocks[static_cast<std::size_t>(i)]);
  ParabolicData q = parabolic_from_boundaries(p.r, boundaries_of_blocks(new_blocks));
  q.kind = p.kind;
  q.s = p.s;
  PChar nu = from_epsilon(shifted);
  if (!nu.supported_on(q.boundaries)) throw MathError("rho-shifted character left the new parabolic");
  return {std::move(q), std::move(nu)};
}

PChar prlevi2_transform(int s, int r, const PChar& mu) {
  const ParabolicData pp = blocks(ParabolicKind::PPrime, s, r);
  if (mu.r != r) throw InputError("character has the wrong rank");
  if (!mu.supported_on(pp.boundaries)) throw InputError("character is not supported on the boundaries of p'(s, r)");
  const int q = r / s;
  if (q == 1) return mu;
  PChar nu = mu;
  const Rational mu1 = mu.at(1), muq = mu.at(q);
  nu.coeffs.erase(1);
  nu.coeffs.erase(q);
  if (q >= 3) {
    if (mu.at(q - 1) != 0) throw InputError("character has a coefficient at r/s - 1");
    nu.coeffs.erase(q - 1);
  }
  nu.add(q - 1, -mu1 - q);
  nu.add(q, mu1 + muq + q - 1);
  const ParabolicData pdp = blocks(ParabolicKind::PDoublePrime, s, r);
  if (!nu.supported_on(pdp.boundaries)) throw MathError("transformed character is not supported on p''(s, r)");
  return nu;
}

Rational genrep_hyperplane(StarType type, int n, const Rational& k, const ClassFunction& c) {
  const McKayData& data = mckay_data(type);
  const RootWeight lambda = lambda_of_c(data, c);
  return lambda.coords.at(static_cast<std::size_t>(data.star.affinizing())) + k * (n - 1) / 2 - 1;
}

bool is_nonnegative_integer(const Rational& q) { return q.get_den() == 1 && q >= 0; }

HyperplaneAudit hyperplane_audit(StarType type, int n, const Rational& k, const ClassFunction& c) {
  const MainTheoremParams params = main_theorem_params(type, n, k, c);
  const auto& [p, mu] = params.legs.back();
  const PChar nu = prlevi2_transform(p.s, p.r, mu);
  return {nu.at(n), genrep_hyperplane(type, n, k, c)};
}

}  // namespace srt
