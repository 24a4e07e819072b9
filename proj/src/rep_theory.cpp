#include "srt/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "srt/error.hpp"

namespace srt {

std::vector<int> DominantWeight::partition() const {
  std::vector<int> lambda(static_cast<std::size_t>(r), 0);
  int acc = 0;
  for (int t = r - 1; t-- > 0;) {
    acc += coeffs[static_cast<std::size_t>(t)];
    lambda[static_cast<std::size_t>(t)] = acc;
  }
  return lambda;
}

DominantWeight DominantWeight::from_partition(const std::vector<int>& lambda) {
  DominantWeight w;
  w.r = static_cast<int>(lambda.size());
  for (std::size_t t = 0; t + 1 < lambda.size(); ++t) w.coeffs.push_back(lambda[t] - lambda[t + 1]);
  validate(w);
  return w;
}

bool DominantWeight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int a) { return a == 0; });
}

void validate(const DominantWeight& w) {
  if (w.r < 2) throw InputError("rank r must be at least 2");
  if (w.coeffs.size() != static_cast<std::size_t>(w.r - 1)) {
    throw InputError("a weight of sl_" + std::to_string(w.r) + " needs " + std::to_string(w.r - 1) + " coefficients");
  }
  for (int a : w.coeffs) {
    if (a < 0) throw InputError("weight coefficients must be nonnegative");
  }
}

Integer weyl_dim(const DominantWeight& w) {
  validate(w);
  const auto lambda = w.partition();
  Rational d = 1;
  for (int i = 0; i < w.r; ++i) {
    for (int j = i + 1; j < w.r; ++j) {
      d *= Rational(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) throw MathError("Weyl dimension is not an integer");
  return d.get_num();
}

namespace {

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

bool dominated(std::vector<int> nu, const std::vector<int>& lambda) {
  std::sort(nu.begin(), nu.end(), std::greater<>());
  long a = 0, b = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    a += nu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return a == b;
}

// partitions of `total` with at most r parts dominated by lambda, lex descending
void dominant_below(const std::vector<int>& lambda, std::vector<std::vector<int>>& out) {
  const std::size_t r = lambda.size();
  long total = 0;
  for (int x : lambda) total += x;
  std::vector<int> cur(r, 0);
  std::function<void(std::size_t, long, int, long)> rec = [&](std::size_t i, long left, int cap, long prefix) {
    if (i == r) {
      if (left == 0) out.push_back(cur);
      return;
    }
    long lam_prefix = 0;
    for (std::size_t t = 0; t <= i; ++t) lam_prefix += lambda[t];
    const int hi = static_cast<int>(std::min<long>({static_cast<long>(cap), left, lam_prefix - prefix}));
    for (int v = hi; v >= 0; --v) {
      if (static_cast<long>(v) * static_cast<long>(r - i) < left) break;  // remaining parts are <= v
      cur[i] = v;
      rec(i + 1, left - v, v, prefix + v);
    }
    cur[i] = 0;
  };
  rec(0, total, lambda.empty() ? 0 : lambda[0], 0);
}

FormalCharacter compute_character(const DominantWeight& w) {
  const std::vector<int> lambda = w.partition();
  const auto r = static_cast<std::size_t>(w.r);
  std::vector<int> rho(r);
  for (std::size_t t = 0; t < r; ++t) rho[t] = static_cast<int>(r - 1 - t);
  auto plus = [](std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  std::vector<std::vector<int>> dominant;
  dominant_below(lambda, dominant);
  std::map<std::vector<int>, long> dom_mult;
  const std::vector<int> lr = plus(lambda, rho);
  const long norm_top = dot(lr, lr);
  auto mult_of = [&](std::vector<int> nu) -> long {
    std::sort(nu.begin(), nu.end(), std::greater<>());
    auto it = dom_mult.find(nu);
    return it == dom_mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    const std::vector<int> mr = plus(mu, rho);
    const long denom = norm_top - dot(mr, mr);
    long num = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        std::vector<int> nu = mu;
        while (true) {
          ++nu[i];
          --nu[j];
          if (!dominated(nu, lambda)) break;
          num += mult_of(nu) * static_cast<long>(nu[i] - nu[j]);
        }
      }
    }
    num *= 2;
    if (denom <= 0 || num % denom != 0) throw MathError("Freudenthal recursion produced a non-integer multiplicity");
    if (num / denom > 0) dom_mult[mu] = num / denom;
  }
  FormalCharacter ch;
  for (const auto& [mu, m] : dom_mult) {
    std::vector<int> perm = mu;
    std::sort(perm.begin(), perm.end());
    do {
      ch[perm] = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return ch;
}

// sign of the permutation sorting v into strictly descending order, 0 if v has repeats
int descending_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) return 0;
  }
  return sign;
}

}  // namespace

const FormalCharacter& character(const DominantWeight& w) {
  validate(w);
  static std::mutex m;
  static std::map<std::vector<int>, std::unique_ptr<FormalCharacter>> cache;
  std::vector<int> key = w.coeffs;
  key.insert(key.begin(), w.r);
  {
    std::lock_guard lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto ch = std::make_unique<FormalCharacter>(compute_character(w));
  std::lock_guard lock(m);
  auto [it, inserted] = cache.emplace(key, std::move(ch));
  return *it->second;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [wa, ma] : a) {
    for (const auto& [wb, mb] : b) {
      std::vector<int> w = wa;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      out[w] += ma * mb;
    }
  }
  return out;
}

long multiplicity(const FormalCharacter& ch, int r, const std::vector<int>& highest) {
  const auto ur = static_cast<std::size_t>(r);
  if (highest.size() != ur) throw InputError("highest weight has the wrong length");
  // coefficient of e^{highest + rho} in ch * sum_s sgn(s) e^{s rho}
  long total = 0;
  for (const auto& [w, m] : ch) {
    std::vector<int> v(ur);
    for (std::size_t t = 0; t < ur; ++t) v[t] = highest[t] + static_cast<int>(ur - 1 - t) - w[t];
    // v must be a permutation of rho
    std::vector<int> sorted = v;
    const int sign = descending_sign(sorted);
    if (sign == 0) continue;
    bool is_rho = true;
    for (std::size_t t = 0; t < ur && is_rho; ++t) is_rho = sorted[t] == static_cast<int>(ur - 1 - t);
    if (is_rho) total += sign * m;
  }
  return total;
}

long invariant_dim(const std::vector<DominantWeight>& weights) {
  if (weights.empty()) return 1;
  const int r = weights.front().r;
  for (const auto& w : weights) {
    validate(w);
    if (w.r != r) throw InputError("all weights must belong to the same sl_r");
  }
  // the largest factor enters only through its highest weight
  std::vector<DominantWeight> sorted = weights;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const DominantWeight& a, const DominantWeight& b) { return weyl_dim(a) < weyl_dim(b); });
  FormalCharacter acc{{std::vector<int>(static_cast<std::size_t>(r), 0), 1}};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) acc = multiply(acc, character(sorted[i]));
  // trivial in acc (x) V(last)  <=>  V(last^*) in acc, where last^* has partition
  // (l_1 - l_r, l_1 - l_{r-1}, ..., 0) shifted so that the total weight matches
  const auto last = sorted.back().partition();
  long total = 0;
  for (const auto& [w, m] : acc) {
    (void)m;
    for (int x : w) total += x;
    break;
  }
  total += std::accumulate(last.begin(), last.end(), 0L);
  if (total % r != 0) return 0;
  const long c = total / r;
  std::vector<int> dual(static_cast<std::size_t>(r));
  for (std::size_t t = 0; t < dual.size(); ++t) dual[t] = static_cast<int>(c - last[dual.size() - 1 - t]);
  return multiplicity(acc, r, dual);
}

long levi_mult(const DominantWeight& w, const std::vector<int>& blocks) {
  validate(w);
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != w.r) throw InputError("block sizes must sum to r");
  for (int m : blocks) {
    if (m <= 0) throw InputError("block sizes must be positive");
  }
  const FormalCharacter& ch = character(w);
  const auto lambda = w.partition();
  const long total = std::accumulate(lambda.begin(), lambda.end(), 0L);
  if (total % w.r != 0) return 0;
  const int c = static_cast<int>(total / w.r);
  long out = 0;
  for (const auto& [wt, m] : ch) {
    // product over blocks of the alternating sum for the block's GL
    int sign = 1;
    std::size_t start = 0;
    for (int size : blocks) {
      std::vector<int> v;
      for (int t = 0; t < size; ++t) v.push_back(c + (size - 1 - t) - wt[start + static_cast<std::size_t>(t)]);
      std::vector<int> sorted = v;
      const int s = descending_sign(sorted);
      bool is_rho = s != 0;
      for (int t = 0; t < size && is_rho; ++t) is_rho = sorted[static_cast<std::size_t>(t)] == size - 1 - t;
      if (!is_rho) {
        sign = 0;
        break;
      }
      sign *= s;
      start += static_cast<std::size_t>(size);
    }
    out += sign * m;
  }
  return out;
}

Integer genrep_dim(int n, int q) {
  if (n < 1 || q < 0) throw InputError("genrep_dim needs n >= 1 and q >= 0");
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + q), static_cast<unsigned long>(n));
  DominantWeight w;
  w.r = n + 1;
  w.coeffs.assign(static_cast<std::size_t>(n), 0);
  w.coeffs[0] = q;
  if (weyl_dim(w) != b) throw MathError("binomial and Weyl dimension disagree");
  return b;
}

}  // namespace srt
