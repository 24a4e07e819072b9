#include "srt/mckay.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "srt/error.hpp"

namespace srt {

GroupKind group_kind(StarType t) {
  switch (t) {
    case StarType::D4: return GroupKind::Quaternion8;
    case StarType::E6: return GroupKind::BinaryTetrahedral;
    case StarType::E7: return GroupKind::BinaryOctahedral;
    case StarType::E8: return GroupKind::BinaryIcosahedral;
  }
  return GroupKind::Quaternion8;
}

StarType star_type(GroupKind kind) {
  switch (kind) {
    case GroupKind::Quaternion8: return StarType::D4;
    case GroupKind::BinaryTetrahedral: return StarType::E6;
    case GroupKind::BinaryOctahedral: return StarType::E7;
    case GroupKind::BinaryIcosahedral: return StarType::E8;
  }
  return StarType::D4;
}

std::string_view group_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Quaternion8: return "Quaternion8";
    case GroupKind::BinaryTetrahedral: return "BinaryTetrahedral";
    case GroupKind::BinaryOctahedral: return "BinaryOctahedral";
    case GroupKind::BinaryIcosahedral: return "BinaryIcosahedral";
  }
  return "?";
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

CycNumber mat_det(const Mat2& x) { return x[0] * x[3] - x[1] * x[2]; }
CycNumber mat_trace(const Mat2& x) { return x[0] + x[3]; }

int FiniteSubgroup::class_index(std::string_view label) const {
  for (int k = 0; k < num_classes(); ++k) {
    if (classes[static_cast<std::size_t>(k)].label == label) return k;
  }
  throw InputError("unknown conjugacy class label \"" + std::string(label) + "\"");
}

namespace {

int group_exponent(GroupKind kind) {
  switch (kind) {
    case GroupKind::Quaternion8: return 4;
    case GroupKind::BinaryTetrahedral: return 12;
    case GroupKind::BinaryOctahedral: return 24;
    case GroupKind::BinaryIcosahedral: return 60;
  }
  return 1;
}

// a + b i + c j + d k  ->  [[a + b I, c + d I], [-c + d I, a - b I]],  I = sqrt(-1).
Mat2 quaternion(int conductor, const CycNumber& a, const CycNumber& b, const CycNumber& c,
                const CycNumber& d) {
  const CycNumber i = CycNumber::zeta(conductor, conductor / 4);
  return {(a + b * i).embed(conductor), (c + d * i).embed(conductor),
          (-c + d * i).embed(conductor), (a - b * i).embed(conductor)};
}

std::vector<Mat2> generators(GroupKind kind, int n) {
  const CycNumber zero(0), one(1), half = CycNumber(make_rational(1, 2));
  std::vector<Mat2> gens = {quaternion(n, zero, one, zero, zero),
                            quaternion(n, zero, zero, one, zero)};
  if (kind == GroupKind::Quaternion8) return gens;
  gens.push_back(quaternion(n, half, half, half, half));
  if (kind == GroupKind::BinaryOctahedral) {
    // (1 + i)/sqrt(2) = diag(zeta_8, zeta_8^-1)
    gens.push_back({CycNumber::zeta(n, n / 8), zero.embed(n), zero.embed(n),
                    CycNumber::zeta(n, -n / 8)});
  }
  if (kind == GroupKind::BinaryIcosahedral) {
    // golden ratio phi = 1 + z5 + z5^4, phi^-1 = z5 + z5^4
    const CycNumber inv_phi = CycNumber::zeta(n, n / 5) + CycNumber::zeta(n, 4 * n / 5);
    const CycNumber phi = one + inv_phi;
    gens.push_back(quaternion(n, half * phi, half * inv_phi, half, zero));
  }
  return gens;
}

std::string matrix_key(const Mat2& m) {
  std::string key;
  for (const auto& e : m) {
    for (const auto& c : e.coeffs()) {
      key += c.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

FiniteSubgroup build_group(GroupKind kind) {
  FiniteSubgroup g;
  g.kind = kind;
  const int n = group_exponent(kind);
  g.exponent = n;
  const auto gens = generators(kind, n);
  const CycNumber one = CycNumber(1).embed(n), zero = CycNumber(0).embed(n);

  std::map<std::string, int> index;
  std::vector<int> parent, via;
  std::vector<std::vector<int>> left(gens.size());
  g.elements.push_back({one, zero, zero, one});
  index[matrix_key(g.elements[0])] = 0;
  parent.push_back(-1);
  via.push_back(-1);
  for (std::size_t cur = 0; cur < g.elements.size(); ++cur) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Mat2 y = mat_mul(gens[s], g.elements[cur]);
      const std::string key = matrix_key(y);
      auto [it, inserted] = index.emplace(key, static_cast<int>(g.elements.size()));
      if (inserted) {
        if (mat_det(y) != CycNumber(1)) throw MathError("generator product left SL_2");
        g.elements.push_back(std::move(y));
        parent.push_back(static_cast<int>(cur));
        via.push_back(static_cast<int>(s));
        if (g.elements.size() > 240) throw MathError("group closure did not terminate");
      }
      left[s].resize(std::max(left[s].size(), cur + 1));
      left[s][cur] = it->second;
    }
  }
  const int order = g.order();
  for (auto& l : left) l.resize(static_cast<std::size_t>(order));

  // mult[x][h] = s * (parent(x) * h) where x = s * parent(x)
  g.mult.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::iota(g.mult[0].begin(), g.mult[0].end(), 0);
  for (int x = 1; x < order; ++x) {
    const auto& prow = g.mult[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    const auto& lrow = left[static_cast<std::size_t>(via[static_cast<std::size_t>(x)])];
    for (int h = 0; h < order; ++h) {
      g.mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)] =
          lrow[static_cast<std::size_t>(prow[static_cast<std::size_t>(h)])];
    }
  }
  g.inverse.assign(static_cast<std::size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (g.mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == 0) {
        g.inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
  }

  auto element_order = [&](int x) {
    int o = 1, p = x;
    while (p != 0) {
      p = g.mult[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)];
      ++o;
    }
    return o;
  };

  // conjugacy classes in order of first appearance
  std::vector<int> raw_class(static_cast<std::size_t>(order), -1);
  std::vector<std::vector<int>> raw;
  for (int x = 0; x < order; ++x) {
    if (raw_class[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < order; ++h) {
      const int c = g.mult[static_cast<std::size_t>(g.mult[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)])]
                          [static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(h)])];
      if (raw_class[static_cast<std::size_t>(c)] < 0) {
        raw_class[static_cast<std::size_t>(c)] = static_cast<int>(raw.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    raw.push_back(std::move(members));
  }

  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> trace_value(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    trace_value[k] = mat_trace(g.elements[static_cast<std::size_t>(raw[k].front())]).to_complex().real();
  }
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    if ((a == 0) != (b == 0)) return a == 0;
    const auto sa = raw[static_cast<std::size_t>(a)].size(), sb = raw[static_cast<std::size_t>(b)].size();
    if (sa != sb) return sa < sb;
    const double ta = trace_value[static_cast<std::size_t>(a)], tb = trace_value[static_cast<std::size_t>(b)];
    if (std::abs(ta - tb) > 1e-9) return ta > tb;
    return raw[static_cast<std::size_t>(a)].front() < raw[static_cast<std::size_t>(b)].front();
  });

  g.class_of.assign(static_cast<std::size_t>(order), -1);
  std::map<int, int> letters;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    ConjugacyClass cls;
    cls.elements = raw[static_cast<std::size_t>(perm[k])];
    cls.order = element_order(cls.elements.front());
    cls.trace = mat_trace(g.elements[static_cast<std::size_t>(cls.elements.front())]);
    cls.label = std::to_string(cls.order) + static_cast<char>('a' + letters[cls.order]++);
    for (int x : cls.elements) g.class_of[static_cast<std::size_t>(x)] = static_cast<int>(k);
    g.classes.push_back(std::move(cls));
  }
  for (auto& cls : g.classes) {
    const int rep = cls.representative();
    cls.inverse = g.class_of[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(rep)])];
    int p = 0;
    for (int l = 0; l < cls.order; ++l) {
      cls.power_classes.push_back(g.class_of[static_cast<std::size_t>(p)]);
      p = g.mult[static_cast<std::size_t>(p)][static_cast<std::size_t>(rep)];
    }
  }
  return g;
}

namespace {

// ---- prime-field helpers for the eigenvector method ----

using i64 = long long;

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 pow_mod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

using ModMatrix = std::vector<std::vector<i64>>;

std::vector<std::size_t> rref_mod(ModMatrix& m, i64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const i64 inv = inv_mod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const i64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

ModMatrix nullspace_mod(ModMatrix m, std::size_t cols, i64 p) {
  const auto pivots = rref_mod(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-m[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CharTable character_table(const FiniteSubgroup& group) {
  const int r = group.num_classes();
  const auto ur = static_cast<std::size_t>(r);
  const int order = group.order();
  const int e = group.exponent;

  i64 p = e + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  while (!is_prime(p) || static_cast<double>(p) <= bound) p += e;

  // class multiplication coefficients: C_j C_i = sum_k a[j][i][k] C_k
  std::vector<ModMatrix> class_mats(ur, ModMatrix(ur, std::vector<i64>(ur, 0)));
  for (std::size_t j = 0; j < ur; ++j) {
    for (std::size_t k = 0; k < ur; ++k) {
      const int z = group.classes[k].representative();
      for (int x : group.classes[j].elements) {
        const int y = group.mult[static_cast<std::size_t>(group.inverse[static_cast<std::size_t>(x)])]
                                [static_cast<std::size_t>(z)];
        ++class_mats[j][static_cast<std::size_t>(group.class_of[static_cast<std::size_t>(y)])][k];
      }
    }
  }

  // split F_p^r into common eigenspaces of all class matrices
  std::vector<ModMatrix> spaces;  // each: list of basis vectors
  {
    ModMatrix id(ur, std::vector<i64>(ur, 0));
    for (std::size_t i = 0; i < ur; ++i) id[i][i] = 1;
    spaces.push_back(id);
  }
  for (std::size_t j = 1; j < ur; ++j) {
    std::vector<ModMatrix> next;
    for (auto& basis : spaces) {
      const std::size_t s = basis.size();
      if (s == 1) {
        next.push_back(basis);
        continue;
      }
      // restriction R with M B = B R, via rref of [B | M B] arranged row-wise
      ModMatrix aug(ur, std::vector<i64>(2 * s, 0));
      for (std::size_t col = 0; col < s; ++col) {
        for (std::size_t row = 0; row < ur; ++row) {
          aug[row][col] = basis[col][row];
          i64 acc = 0;
          for (std::size_t k = 0; k < ur; ++k) acc += class_mats[j][row][k] * basis[col][k];
          aug[row][s + col] = mod(acc, p);
        }
      }
      rref_mod(aug, p);
      ModMatrix restr(s, std::vector<i64>(s));
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) restr[a][b] = aug[a][s + b];
      }
      std::size_t found = 0;
      for (i64 x = 0; x < p && found < s; ++x) {
        ModMatrix shifted = restr;
        for (std::size_t a = 0; a < s; ++a) shifted[a][a] = mod(shifted[a][a] - x, p);
        ModMatrix ker = nullspace_mod(shifted, s, p);
        if (ker.empty()) continue;
        ModMatrix eig;
        for (const auto& y : ker) {
          std::vector<i64> v(ur, 0);
          for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t row = 0; row < ur; ++row) v[row] = mod(v[row] + y[a] * basis[a][row], p);
          }
          eig.push_back(std::move(v));
        }
        found += eig.size();
        next.push_back(std::move(eig));
      }
      if (found != s) throw MathError("class matrix is not diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces) {
    if (s.size() != 1) throw MathError("character table eigenvector splitting did not converge");
  }
  if (static_cast<int>(spaces.size()) != r) throw MathError("wrong number of irreducible characters");

  // primitive e-th root of unity mod p
  i64 gen = 2;
  for (;; ++gen) {
    bool ok = true;
    for (i64 q = 2; q * q <= p - 1 && ok; ++q) {
      if ((p - 1) % q == 0 && (pow_mod(gen, (p - 1) / q, p) == 1 || pow_mod(gen, q, p) == 1)) ok = false;
    }
    if (ok && pow_mod(gen, p - 1, p) == 1) break;
  }
  const i64 root = pow_mod(gen, (p - 1) / e, p);

  CharTable table;
  for (const auto& sp : spaces) {
    std::vector<i64> w = sp[0];
    const i64 inv0 = inv_mod(w[0], p);
    for (auto& v : w) v = v * inv0 % p;
    // chi(1)^2 sum_k w_k w_{k*} / |C_k| = |G|
    i64 acc = 0;
    for (std::size_t k = 0; k < ur; ++k) {
      const auto& cls = group.classes[k];
      acc = mod(acc + w[k] * w[static_cast<std::size_t>(cls.inverse)] % p * inv_mod(cls.size(), p), p);
    }
    const i64 d2 = order % p * inv_mod(acc, p) % p;
    std::optional<int> dim;
    for (int d = 1; d * d <= order; ++d) {
      if (static_cast<i64>(d) * d % p == d2) {
        dim = d;
        break;
      }
    }
    if (!dim) throw MathError("could not recover a character degree");
    std::vector<i64> chi_mod(ur);
    for (std::size_t k = 0; k < ur; ++k) {
      chi_mod[k] = w[k] * *dim % p * inv_mod(group.classes[k].size(), p) % p;
    }
    std::vector<CycNumber> row;
    for (std::size_t k = 0; k < ur; ++k) {
      const auto& cls = group.classes[k];
      const int o = cls.order;
      const i64 z = pow_mod(root, e / o, p);
      std::vector<Rational> poly(static_cast<std::size_t>(e));
      int total = 0;
      for (int t = 0; t < o; ++t) {
        i64 m = 0;
        for (int l = 0; l < o; ++l) {
          m = mod(m + chi_mod[static_cast<std::size_t>(cls.power_classes[static_cast<std::size_t>(l)])] *
                          pow_mod(z, mod(-static_cast<i64>(t) * l, o), p),
                  p);
        }
        m = m * inv_mod(o, p) % p;
        if (m > *dim) throw MathError("eigenvalue multiplicity out of range while lifting a character");
        total += static_cast<int>(m);
        poly[static_cast<std::size_t>(t * (e / o))] += static_cast<long>(m);
      }
      if (total != *dim) throw MathError("lifted character has inconsistent degree");
      row.push_back(CycNumber::from_poly(e, poly));
    }
    table.rows.push_back(std::move(row));
    table.dims.push_back(*dim);
  }

  // canonical row order: degree, then trivial first, then numeric values
  std::vector<int> perm(table.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto is_trivial = [&](int i) {
    for (const auto& v : table.rows[static_cast<std::size_t>(i)]) {
      if (v != CycNumber(1)) return false;
    }
    return true;
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    if (table.dims[ua] != table.dims[ub]) return table.dims[ua] < table.dims[ub];
    if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
    for (std::size_t k = 0; k < ur; ++k) {
      const auto za = table.rows[ua][k].to_complex(), zb = table.rows[ub][k].to_complex();
      if (std::abs(za.real() - zb.real()) > 1e-9) return za.real() > zb.real();
      if (std::abs(za.imag() - zb.imag()) > 1e-9) return za.imag() > zb.imag();
    }
    return false;
  });
  CharTable sorted;
  for (int i : perm) {
    sorted.rows.push_back(table.rows[static_cast<std::size_t>(i)]);
    sorted.dims.push_back(table.dims[static_cast<std::size_t>(i)]);
  }

  // exact validation: orthogonality and the two distinguished rows
  const int nrows = sorted.num_irreps();
  for (int a = 0; a < nrows; ++a) {
    for (int b = a; b < nrows; ++b) {
      const CycNumber ip = class_inner_product(group, sorted.rows[static_cast<std::size_t>(a)],
                                               sorted.rows[static_cast<std::size_t>(b)]);
      if (ip != CycNumber(a == b ? 1 : 0)) throw MathError("character table fails row orthogonality");
    }
  }
  sorted.trivial = -1;
  sorted.tautological = -1;
  for (int a = 0; a < nrows; ++a) {
    if (is_trivial(perm[static_cast<std::size_t>(a)])) sorted.trivial = a;
    bool taut = true;
    for (std::size_t k = 0; k < ur && taut; ++k) {
      taut = sorted.rows[static_cast<std::size_t>(a)][k] == group.classes[k].trace;
    }
    if (taut) sorted.tautological = a;
  }
  if (sorted.trivial < 0 || sorted.tautological < 0) {
    throw MathError("character table lacks the trivial or tautological character");
  }
  return sorted;
}

CycNumber class_inner_product(const FiniteSubgroup& group, const std::vector<CycNumber>& a,
                              const std::vector<CycNumber>& b) {
  CycNumber sum;
  for (int k = 0; k < group.num_classes(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    sum += CycNumber(group.classes[uk].size()) * a[uk] * b[uk].conj();
  }
  return sum / CycNumber(group.order());
}

std::vector<std::vector<int>> mckay_graph(const FiniteSubgroup& group, const CharTable& table) {
  const int n = table.num_irreps();
  const auto& taut = table.rows[static_cast<std::size_t>(table.tautological)];
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    std::vector<CycNumber> prod;
    for (int k = 0; k < group.num_classes(); ++k) {
      prod.push_back(table.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     taut[static_cast<std::size_t>(k)]);
    }
    for (int j = 0; j < n; ++j) {
      const auto q = class_inner_product(group, prod, table.rows[static_cast<std::size_t>(j)]).to_rational();
      if (!q || q->get_den() != 1 || *q < 0) throw MathError("tensor multiplicity is not a natural number");
      mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(q->get_num().get_si());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m != mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] || m > 1 || (i == j && m != 0)) {
        throw MathError("McKay graph is not a simple symmetric graph");
      }
    }
  }
  return mult;
}

DynkinStar identify_star(const std::vector<std::vector<int>>& graph, int trivial,
                         const std::vector<int>& dims, std::vector<int>& vertex_irrep) {
  const int n = static_cast<int>(graph.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) adj[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  int node = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[static_cast<std::size_t>(i)].size() >= 3) {
      if (node >= 0) throw MathError("McKay graph has more than one branch vertex");
      node = i;
    }
  }
  if (node < 0) throw MathError("McKay graph is not star-shaped");

  struct Leg {
    std::vector<int> outward;  // irreps from the node outward
    bool has_trivial = false;
  };
  std::vector<Leg> legs;
  for (int start : adj[static_cast<std::size_t>(node)]) {
    Leg leg;
    int prev = node, cur = start;
    while (true) {
      leg.outward.push_back(cur);
      if (cur == trivial) leg.has_trivial = true;
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) {
          if (next >= 0) throw MathError("McKay graph leg branches");
          next = w;
        }
      }
      if (next < 0) break;
      if (next == node) throw MathError("McKay graph has a cycle");
      prev = cur;
      cur = next;
    }
    legs.push_back(std::move(leg));
  }
  std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
    if (a.outward.size() != b.outward.size()) return a.outward.size() < b.outward.size();
    if (a.has_trivial != b.has_trivial) return b.has_trivial;
    return a.outward.back() < b.outward.back();
  });
  std::vector<int> leg_data;
  for (const auto& l : legs) leg_data.push_back(static_cast<int>(l.outward.size()) + 1);

  std::optional<StarType> type;
  for (StarType t : kAllStarTypes) {
    if (star_legs(t) == leg_data) type = t;
  }
  if (!type) throw MathError("McKay graph is not an affine D4/E6/E7/E8 star");
  if (!legs.back().has_trivial || legs.back().outward.back() != trivial) {
    throw MathError("trivial representation is not at the affinizing vertex");
  }
  DynkinStar star(*type);
  vertex_irrep.assign(static_cast<std::size_t>(star.num_vertices()), -1);
  vertex_irrep[0] = node;
  for (int j = 1; j <= star.num_legs(); ++j) {
    const auto& out = legs[static_cast<std::size_t>(j - 1)].outward;
    const int d = star.leg_length(j);
    for (int i = 1; i < d; ++i) {
      vertex_irrep[static_cast<std::size_t>(star.index_of(j, i))] = out[static_cast<std::size_t>(d - 1 - i)];
    }
  }
  (void)dims;
  return star;
}

Rational ClassFunction::at(int cls) const {
  auto it = values.find(cls);
  return it == values.end() ? Rational(0) : it->second;
}

int McKayData::dim_at(int vertex) const {
  return table.dims[static_cast<std::size_t>(vertex_irrep[static_cast<std::size_t>(vertex)])];
}

const McKayData& mckay_data(StarType type) {
  static std::mutex m;
  static std::map<StarType, std::unique_ptr<McKayData>> cache;
  std::lock_guard lock(m);
  if (auto it = cache.find(type); it != cache.end()) return *it->second;
  FiniteSubgroup group = build_group(group_kind(type));
  CharTable table = character_table(group);
  auto graph = mckay_graph(group, table);
  std::vector<int> vertex_irrep;
  DynkinStar star = identify_star(graph, table.trivial, table.dims, vertex_irrep);
  if (star.type() != type) throw MathError("McKay graph type mismatch");
  std::vector<int> irrep_vertex(vertex_irrep.size());
  for (std::size_t v = 0; v < vertex_irrep.size(); ++v) {
    irrep_vertex[static_cast<std::size_t>(vertex_irrep[v])] = static_cast<int>(v);
  }
  auto data = std::make_unique<McKayData>(McKayData{std::move(group), std::move(table), std::move(graph),
                                                    std::move(star), std::move(vertex_irrep),
                                                    std::move(irrep_vertex)});
  return *cache.emplace(type, std::move(data)).first->second;
}

void validate_class_function(const FiniteSubgroup& group, const ClassFunction& c) {
  for (const auto& [cls, v] : c.values) {
    if (cls < 0 || cls >= group.num_classes()) throw InputError("class function index out of range");
    if (cls == group.class_of[static_cast<std::size_t>(group.identity())]) {
      throw InputError("class function must not have a value on the identity class");
    }
  }
}

std::vector<CycNumber> lambda_of_c_exact(const McKayData& data, const ClassFunction& c) {
  validate_class_function(data.group, c);
  const auto& g = data.group;
  std::vector<CycNumber> out;
  for (int v = 0; v < data.star.num_vertices(); ++v) {
    const auto& row = data.table.rows[static_cast<std::size_t>(data.vertex_irrep[static_cast<std::size_t>(v)])];
    CycNumber sum(data.dim_at(v));
    for (int k = 1; k < g.num_classes(); ++k) {
      const Rational ck = c.at(k);
      if (ck == 0) continue;
      sum += CycNumber(ck * g.classes[static_cast<std::size_t>(k)].size()) * row[static_cast<std::size_t>(k)];
    }
    out.push_back(sum / CycNumber(g.order()));
  }
  return out;
}

std::vector<std::vector<int>> rational_classes(const FiniteSubgroup& g) {
  std::vector<int> orbit_of(static_cast<std::size_t>(g.num_classes()), -1);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < g.num_classes(); ++k) {
    if (orbit_of[static_cast<std::size_t>(k)] >= 0) continue;
    const ConjugacyClass& cls = g.classes[static_cast<std::size_t>(k)];
    std::vector<int> orbit;
    for (int e = 1; e <= cls.order; ++e) {
      if (std::gcd(e, cls.order) != 1) continue;
      const int target = cls.power_classes[static_cast<std::size_t>(e % cls.order)];
      if (std::find(orbit.begin(), orbit.end(), target) == orbit.end()) orbit.push_back(target);
    }
    std::sort(orbit.begin(), orbit.end());
    for (int t : orbit) orbit_of[static_cast<std::size_t>(t)] = static_cast<int>(out.size());
    out.push_back(std::move(orbit));
  }
  return out;
}

RootWeight lambda_of_c(const McKayData& data, const ClassFunction& c) {
  RootWeight w;
  const auto exact = lambda_of_c_exact(data, c);
  for (std::size_t v = 0; v < exact.size(); ++v) {
    auto q = exact[v].to_rational();
    if (!q) {
      throw MathError("lambda(c) has an irrational coordinate at vertex " +
                      data.star.label(static_cast<int>(v)) +
                      "; c must be constant on Galois-conjugate classes (see rational_classes)");
    }
    w.coords.push_back(*q);
  }
  return w;
}

CycNumber delta_pairing(const McKayData& data, const std::vector<CycNumber>& lambda) {
  CycNumber sum;
  for (int v = 0; v < data.star.num_vertices(); ++v) {
    sum += lambda[static_cast<std::size_t>(v)] * CycNumber(data.dim_at(v));
  }
  return sum;
}

}  // namespace srt
