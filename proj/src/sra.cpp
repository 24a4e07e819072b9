#include "srt/sra.hpp"

#include <set>

#include "srt/error.hpp"
#include "srt/linalg.hpp"

namespace srt {

WreathElement wreath_identity(int n) {
  WreathElement e;
  for (int l = 0; l < n; ++l) {
    e.perm.push_back(l);
    e.tuple.push_back(0);
  }
  return e;
}

WreathElement wreath_mul(const FiniteSubgroup& g, const WreathElement& a, const WreathElement& b) {
  const std::size_t n = a.perm.size();
  WreathElement out;
  out.perm.resize(n);
  out.tuple.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto tj = static_cast<std::size_t>(b.perm[j]);
    out.perm[j] = a.perm[tj];
    out.tuple[j] = g.mult[static_cast<std::size_t>(a.tuple[tj])][static_cast<std::size_t>(b.tuple[j])];
  }
  return out;
}

WreathElement wreath_inverse(const FiniteSubgroup& g, const WreathElement& a) {
  const std::size_t n = a.perm.size();
  WreathElement out;
  out.perm.resize(n);
  out.tuple.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.perm[static_cast<std::size_t>(a.perm[j])] = static_cast<int>(j);
  for (std::size_t j = 0; j < n; ++j) {
    out.tuple[j] = g.inverse[static_cast<std::size_t>(a.tuple[static_cast<std::size_t>(out.perm[j])])];
  }
  return out;
}

WreathElement swap_twist(const FiniteSubgroup& g, int n, int l, int m, int gamma) {
  WreathElement e = wreath_identity(n);
  std::swap(e.perm[static_cast<std::size_t>(l)], e.perm[static_cast<std::size_t>(m)]);
  e.tuple[static_cast<std::size_t>(l)] = gamma;
  e.tuple[static_cast<std::size_t>(m)] = g.inverse[static_cast<std::size_t>(gamma)];
  return e;
}

bool LinExpr::is_zero() const {
  if (!constant.is_zero() || !t.is_zero() || !k.is_zero()) return false;
  for (const auto& [cls, v] : c) {
    if (!v.is_zero()) return false;
  }
  return true;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant += o.constant;
  t += o.t;
  k += o.k;
  for (const auto& [cls, v] : o.c) {
    CycNumber& slot = c[cls];
    slot += v;
    if (slot.is_zero()) c.erase(cls);
  }
  return *this;
}

LinExpr& LinExpr::operator*=(const CycNumber& s) {
  constant *= s;
  t *= s;
  k *= s;
  for (auto it = c.begin(); it != c.end();) {
    it->second *= s;
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const LinExpr& a, const LinExpr& b) {
  LinExpr d = a;
  LinExpr nb = b;
  nb *= CycNumber(-1);
  d += nb;
  return d.is_zero();
}

CycNumber evaluate(const LinExpr& e, const SRAParams& p) {
  CycNumber out = e.constant + e.t * CycNumber(p.t) + e.k * CycNumber(p.k);
  for (const auto& [cls, v] : e.c) out += v * CycNumber(p.c.at(cls));
  return out;
}

void SmashElement::add(const Word& w, const WreathElement& g, const LinExpr& coeff) {
  if (coeff.is_zero()) return;
  auto key = std::make_pair(w, g);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

CycNumber omega(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

namespace {

Vec2 apply(const Mat2& m, const Vec2& u) { return {m[0] * u[0] + m[1] * u[1], m[2] * u[0] + m[3] * u[1]}; }

LinExpr constant_expr(const CycNumber& v) {
  LinExpr e;
  e.constant = v;
  return e;
}

// u_l v_m - v_m u_l, identity group part
void add_commutator(SmashElement& out, int n, int l, int m, const Vec2& u, const Vec2& v) {
  const WreathElement id = wreath_identity(n);
  for (int b = 0; b < 2; ++b) {
    for (int b2 = 0; b2 < 2; ++b2) {
      const CycNumber coeff = u[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(b2)];
      if (coeff.is_zero()) continue;
      out.add({{b, l}, {b2, m}}, id, constant_expr(coeff));
      out.add({{b2, m}, {b, l}}, id, constant_expr(-coeff));
    }
  }
}

}  // namespace

SmashElement relator(const FiniteSubgroup& g, int n, int l, int m, const Vec2& u, const Vec2& v) {
  if (n < 1 || l < 0 || m < 0 || l >= n || m >= n) throw InputError("relator indices out of range");
  SmashElement out;
  add_commutator(out, n, l, m, u, v);
  const CycNumber half(make_rational(1, 2));
  if (l != m) {
    // - RHS = (k/2) sum_gamma omega(gamma u, v) s_lm gamma_l gamma_m^{-1}
    for (int gamma = 0; gamma < g.order(); ++gamma) {
      LinExpr e;
      e.k = half * omega(apply(g.elements[static_cast<std::size_t>(gamma)], u), v);
      out.add({}, swap_twist(g, n, l, m, gamma), e);
    }
    return out;
  }
  const CycNumber w = omega(u, v);
  LinExpr te;
  te.t = -w;
  out.add({}, wreath_identity(n), te);
  for (int gamma = 1; gamma < g.order(); ++gamma) {
    WreathElement gl = wreath_identity(n);
    gl.tuple[static_cast<std::size_t>(l)] = gamma;
    LinExpr ce;
    ce.c[g.class_of[static_cast<std::size_t>(gamma)]] = -w;
    out.add({}, gl, ce);
  }
  for (int m2 = 0; m2 < n; ++m2) {
    if (m2 == l) continue;
    for (int gamma = 0; gamma < g.order(); ++gamma) {
      LinExpr ke;
      ke.k = -w * half;
      out.add({}, swap_twist(g, n, l, m2, gamma), ke);
    }
  }
  return out;
}

namespace {

const Vec2 kBasis[2] = {{CycNumber(1), CycNumber(0)}, {CycNumber(0), CycNumber(1)}};

}  // namespace

std::vector<SmashElement> relator_set(const FiniteSubgroup& g, int n) {
  std::vector<SmashElement> out;
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) out.push_back(relator(g, n, l, m, kBasis[a], kBasis[b]));
      }
    }
  }
  return out;
}

std::map<WreathElement, CycNumber> group_part(const SmashElement& e, const SRAParams& p) {
  std::map<WreathElement, CycNumber> out;
  for (const auto& [key, coeff] : e.terms) {
    if (!key.first.empty()) continue;
    CycNumber v = evaluate(coeff, p);
    if (!v.is_zero()) out[key.second] += v;
  }
  return out;
}

namespace {

using Key = std::pair<Word, WreathElement>;

std::map<Key, CycNumber> evaluated(const SmashElement& e, const SRAParams& p) {
  std::map<Key, CycNumber> out;
  for (const auto& [key, coeff] : e.terms) {
    CycNumber v = evaluate(coeff, p);
    if (!v.is_zero()) out.emplace(key, std::move(v));
  }
  return out;
}

// True iff every candidate lies in the span of the basis elements.
bool all_in_span(const std::vector<std::map<Key, CycNumber>>& basis, const std::vector<std::map<Key, CycNumber>>& candidates) {
  std::map<Key, std::size_t> index;
  for (const auto* set : {&basis, &candidates}) {
    for (const auto& e : *set) {
      for (const auto& [k, v] : e) index.emplace(k, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [k, i] : index) i = next++;
  auto dense = [&](const std::map<Key, CycNumber>& e) {
    std::vector<CycNumber> row(index.size(), CycNumber(0));
    for (const auto& [k, v] : e) row[index.at(k)] = v;
    return row;
  };
  linalg::Matrix<CycNumber> rows;
  for (const auto& e : basis) rows.push_back(dense(e));
  linalg::Matrix<CycNumber> reduced = rows;
  const auto pivots = linalg::rref(reduced);
  for (const auto& c : candidates) {
    std::vector<CycNumber> v = dense(c);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (v[pivots[i]].is_zero()) continue;
      const CycNumber f = v[pivots[i]];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!reduced[i][j].is_zero()) v[j] -= f * reduced[i][j];
      }
    }
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

SmashElement conjugate(const FiniteSubgroup& grp, const WreathElement& g, const SmashElement& e) {
  const WreathElement ginv = wreath_inverse(grp, g);
  SmashElement out;
  for (const auto& [key, coeff] : e.terms) {
    const auto& [word, h] = key;
    const WreathElement conj = wreath_mul(grp, wreath_mul(grp, g, h), ginv);
    // expand g.word letter by letter
    std::vector<std::pair<Word, CycNumber>> expanded = {{{}, CycNumber(1)}};
    for (const auto& [b, l] : word) {
      const Mat2& m = grp.elements[static_cast<std::size_t>(g.tuple[static_cast<std::size_t>(l)])];
      const int pos = g.perm[static_cast<std::size_t>(l)];
      std::vector<std::pair<Word, CycNumber>> next;
      for (const auto& [w, c] : expanded) {
        for (int b2 = 0; b2 < 2; ++b2) {
          const CycNumber entry = m[static_cast<std::size_t>(2 * b2 + b)];
          if (entry.is_zero()) continue;
          Word w2 = w;
          w2.emplace_back(b2, pos);
          next.emplace_back(std::move(w2), c * entry);
        }
      }
      expanded = std::move(next);
    }
    for (const auto& [w, c] : expanded) {
      LinExpr scaled = coeff;
      scaled *= c;
      out.add(w, conj, scaled);
    }
  }
  return out;
}

}  // namespace

bool scaling_check(const FiniteSubgroup& g, int n, const Rational& b, const SRAParams& params) {
  if (b == 0) throw InputError("the scaling factor must be nonzero");
  const Rational a = b * b;
  SRAParams scaled_params = params;
  scaled_params.t *= a;
  scaled_params.k *= a;
  for (auto& [cls, v] : scaled_params.c.values) v *= a;
  for (const SmashElement& r : relator_set(g, n)) {
    // (a t, a k, a c)-relator with u -> b u substituted into its words
    SmashElement lhs;
    for (const auto& [key, coeff] : r.terms) {
      LinExpr e = coeff;
      e.t *= CycNumber(a);
      e.k *= CycNumber(a);
      for (auto& [cls, v] : e.c) v *= CycNumber(a);
      Rational factor = 1;
      for (std::size_t i = 0; i < key.first.size(); ++i) factor *= b;
      e.constant *= CycNumber(factor);
      e.t *= CycNumber(factor);
      e.k *= CycNumber(factor);
      for (auto& [cls, v] : e.c) v *= CycNumber(factor);
      lhs.add(key.first, key.second, e);
    }
    SmashElement rhs;
    for (const auto& [key, coeff] : r.terms) {
      LinExpr e = coeff;
      e *= CycNumber(a);
      rhs.add(key.first, key.second, e);
    }
    if (!(lhs == rhs)) return false;
    // the same identity after specializing: phi(R_{a p}) = a R_p
    auto lv = evaluated(lhs, params);
    std::map<Key, CycNumber> direct;
    for (const auto& [key, coeff] : r.terms) {
      Rational factor = 1;
      for (std::size_t i = 0; i < key.first.size(); ++i) factor *= b;
      CycNumber v = evaluate(coeff, scaled_params) * CycNumber(factor);
      if (!v.is_zero()) direct.emplace(key, v);
    }
    if (lv != direct) return false;
  }
  return true;
}

bool equivariance_check(const FiniteSubgroup& grp, int n, const WreathElement& g, const SRAParams& params) {
  if (g.perm.size() != static_cast<std::size_t>(n) || g.tuple.size() != static_cast<std::size_t>(n)) {
    throw InputError("group element must have n entries");
  }
  std::set<int> seen(g.perm.begin(), g.perm.end());
  if (seen.size() != static_cast<std::size_t>(n) || *seen.begin() != 0 || *seen.rbegin() != n - 1) {
    throw InputError("perm is not a permutation of 0..n-1");
  }
  for (int x : g.tuple) {
    if (x < 0 || x >= grp.order()) throw InputError("tuple entry is not a group element index");
  }
  std::vector<std::map<Key, CycNumber>> basis, cands;
  const auto relators = relator_set(grp, n);
  for (const auto& r : relators) {
    basis.push_back(evaluated(r, params));
    cands.push_back(evaluated(conjugate(grp, g, r), params));
  }
  return all_in_span(basis, cands);
}

bool antisymmetry_check(const FiniteSubgroup& grp, int n, const Vec2& u, const Vec2& v, const SRAParams& params) {
  std::vector<std::map<Key, CycNumber>> basis, cands;
  for (const auto& r : relator_set(grp, n)) basis.push_back(evaluated(r, params));
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      SmashElement s = relator(grp, n, l, m, u, v);
      for (const auto& [key, coeff] : relator(grp, n, m, l, v, u).terms) s.add(key.first, key.second, coeff);
      cands.push_back(evaluated(s, params));
    }
  }
  return all_in_span(basis, cands);
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (const auto& [b, l] : w) {
    if (!s.empty()) s += "*";
    s += (b == 0 ? "e1_" : "e2_") + std::to_string(l + 1);
  }
  return s.empty() ? "1" : s;
}

}  // namespace srt
