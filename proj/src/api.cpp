#include "srt/api.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "srt/error.hpp"
#include "srt/parabolics.hpp"
#include "srt/qhr.hpp"
#include "srt/rep_theory.hpp"
#include "srt/roots_quiver.hpp"

namespace srt::api {

Json rational(const Rational& q) { return to_string(q); }

Json cyc(const CycNumber& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"N", z.conductor()}, {"coeffs", coeffs}};
}

Json number(const CycNumber& z) {
  if (auto q = z.to_rational()) return rational(*q);
  return cyc(z);
}

Rational parse_rational_json(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw InputError(field + ": expected a rational such as \"3/7\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

ClassFunction parse_class_function(const Json& j, const FiniteSubgroup& g, const std::string& source) {
  if (!j.is_object()) throw InputError(source + ": expected an object mapping class labels to rationals");
  ClassFunction c;
  for (const auto& [label, value] : j.items()) {
    const std::string field = source + ": field \"" + label + "\"";
    int cls = -1;
    try {
      cls = g.class_index(label);
    } catch (const InputError&) {
      throw InputError(field + ": unknown class label for " + std::string(group_name(g.kind)));
    }
    if (cls == g.identity()) throw InputError(field + ": c is not defined on the identity class");
    const Rational v = parse_rational_json(value, field);
    if (v != 0) c.values[cls] = v;
  }
  return c;
}

Json load_json_arg(const std::string& arg, const std::string& source) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw InputError(source + ": cannot read file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

void require_rational_lambda(const FiniteSubgroup& g, const ClassFunction& c, const std::string& source) {
  for (const auto& orbit : rational_classes(g)) {
    for (int cls : orbit) {
      if (c.at(cls) != c.at(orbit.front())) {
        throw InputError(source + ": classes \"" + g.classes[static_cast<std::size_t>(orbit.front())].label + "\" and \"" +
                         g.classes[static_cast<std::size_t>(cls)].label +
                         "\" are Galois conjugate and need equal values for lambda(c) to be rational");
      }
    }
  }
}

namespace {

Json mu_json(const PChar& mu) {
  Json out = Json::array();
  for (const auto& [b, v] : mu.coeffs) out.push_back(Json::array({b, to_string(v)}));
  return out;
}

std::string type_name(StarType t) { return std::string(star_name(t)); }

}  // namespace

Json mckay(StarType type, const std::optional<ClassFunction>& c) {
  const McKayData& d = mckay_data(type);
  const FiniteSubgroup& g = d.group;
  Json classes = Json::array();
  for (const auto& cls : g.classes) {
    classes.push_back({{"label", cls.label}, {"size", cls.size()}, {"order", cls.order},
                       {"inverse", g.classes[static_cast<std::size_t>(cls.inverse)].label}, {"trace", number(cls.trace)}});
  }
  Json rows = Json::array();
  for (const auto& row : d.table.rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(cyc(x));
    rows.push_back(r);
  }
  Json vertices = Json::array();
  for (int v = 0; v < d.star.num_vertices(); ++v) {
    vertices.push_back({{"label", d.star.label(v)}, {"irrep", d.vertex_irrep[static_cast<std::size_t>(v)]}, {"dim", d.dim_at(v)}});
  }
  Json out = {
      {"type", type_name(type)},
      {"group", std::string(group_name(g.kind))},
      {"order", g.order()},
      {"classes", classes},
      {"irreducibles", d.table.num_irreps()},
      {"table", {{"dims", d.table.dims}, {"rows", rows}, {"trivial", d.table.trivial}, {"tautological", d.table.tautological}}},
      {"graph", d.graph},
      {"star", {{"legs", d.star.legs()}, {"vertices", vertices}, {"affinizing", d.star.label(d.star.affinizing())}}},
  };
  if (c) {
    validate_class_function(g, *c);
    const auto exact = lambda_of_c_exact(d, *c);
    Json coords = Json::object();
    bool all_rational = true;
    for (std::size_t v = 0; v < exact.size(); ++v) {
      coords[d.star.label(static_cast<int>(v))] = number(exact[v]);
      all_rational = all_rational && exact[v].is_rational();
    }
    out["lambda"] = {{"coords", coords}, {"rational", all_rational}, {"pairing_with_delta", number(delta_pairing(d, exact))}};
  }
  return out;
}

Json quiver(StarType type, int n, const std::optional<Rational>& k, const std::optional<ClassFunction>& c) {
  if (n < 1) throw InputError("n must be positive");
  const CMQuiver q(type);
  const DynkinStar& star = q.star();
  const auto dl = delta(type);
  const auto part = partial_vector(q, n);
  const auto alpha = alpha_cm(type, n);
  Json labels = Json::array();
  for (int v = 0; v < q.num_vertices(); ++v) labels.push_back(q.label(v));
  Json delta_j = Json::object(), partial_j = Json::object(), alpha_j = Json::object();
  for (int v = 0; v < star.num_vertices(); ++v) {
    delta_j[star.label(v)] = dl[static_cast<std::size_t>(v)];
    partial_j[star.label(v)] = rational(part[static_cast<std::size_t>(v)]);
  }
  for (int v = 0; v < q.num_vertices(); ++v) alpha_j[q.label(v)] = alpha[static_cast<std::size_t>(v)];
  std::vector<long> beta;
  for (int x : dl) beta.push_back(static_cast<long>(n) * x);
  beta[static_cast<std::size_t>(star.affinizing())] -= 1;
  std::vector<long> alpha_l(alpha.begin(), alpha.end());
  const OpenOrbitAudit audit = open_orbit_audit(type, n);
  Json out = {
      {"type", type_name(type)},
      {"n", n},
      {"vertices", labels},
      {"arrows", q.arrows().size()},
      {"delta", delta_j},
      {"partial", partial_j},
      {"alpha_cm", alpha_j},
      {"tits", {{"n_delta_minus_alpha_o", tits_form(q, beta)}, {"alpha_cm", tits_form(q, alpha_l)}}},
      {"audit", {{"dim_group", audit.dim_group}, {"dim_space", audit.dim_space}, {"terms", audit.terms}, {"equal", audit.equal()}}},
  };
  if (k || c) {
    const ClassFunction cf = c.value_or(ClassFunction{});
    require_rational_lambda(mckay_data(type).group, cf);
    const auto chi = chi_cm(q, n, k.value_or(Rational(0)), cf);
    Json chi_j = Json::object();
    for (int v = 0; v < q.num_vertices(); ++v) chi_j[q.label(v)] = rational(chi[static_cast<std::size_t>(v)]);
    out["chi_cm"] = chi_j;
  }
  return out;
}

Json weights(StarType type, int n, const Rational& k, const ClassFunction& c) {
  require_rational_lambda(mckay_data(type).group, c);
  const MainTheoremParams params = main_theorem_params(type, n, k, c);
  Json out = Json::array();
  int leg = 1;
  for (const auto& [p, mu] : params.legs) {
    out.push_back({{"leg", leg++},
                   {"kind", std::string(parabolic_name(p.kind))},
                   {"s", p.s},
                   {"r", p.r},
                   {"blocks", p.blocks},
                   {"boundaries", p.boundaries},
                   {"mu", mu_json(mu)}});
  }
  return out;
}

Json hyperplane(StarType type, int n, const Rational& k, const ClassFunction& c) {
  require_rational_lambda(mckay_data(type).group, c);
  const Rational value = genrep_hyperplane(type, n, k, c);
  const HyperplaneAudit audit = hyperplane_audit(type, n, k, c);
  return {{"type", type_name(type)},
          {"n", n},
          {"value", rational(value)},
          {"on_hyperplane", is_nonnegative_integer(value)},
          {"audit", {{"nu_n", rational(audit.nu_n)}, {"offset", rational(audit.offset())}}}};
}

namespace {

std::vector<long> cumulative(const std::vector<long>& slices) {
  std::vector<long> out;
  long acc = 0;
  for (long s : slices) out.push_back(acc += s);
  return out;
}

Json euler_case(int pairs, int degree, const Rational& chi, const std::function<long(int)>& slice) {
  Reduction red(euler_moment_map(pairs, chi), degree);
  std::vector<long> expected;
  for (int d = 0; d <= degree; ++d) expected.push_back(slice(d));
  expected = cumulative(expected);
  Json out = {{"degree", degree},
              {"chi", rational(chi)},
              {"reduced_dims", red.reduced_dims()},
              {"quotient_of_invariants_dims", red.quotient_of_invariants_dims()},
              {"invariant_dims", red.invariant_dims()},
              {"expected_dims", expected}};
  bool pass = red.reduced_dims() == expected && red.quotient_of_invariants_dims() == red.reduced_dims();
  if (pairs == 2) {
    const WeylOp nf = red.normal_form(sl2_casimir_c2());
    const WeylOp twisted = sl2_casimir_twisted(chi);
    out["casimir_normal_form"] = nf.to_string();
    out["casimir_twisted"] = twisted.to_string();
    pass = pass && nf.as_constant() && twisted.as_constant() && *nf.as_constant() == *twisted.as_constant();
  }
  out["pass"] = pass;
  return out;
}

}  // namespace

Json qhr_demo(const std::string& which, int degree, const Rational& chi) {
  if (degree < 0 || degree > 8) throw InputError("degree must be in 0..8");
  if (which == "p1") {
    Json out = euler_case(2, degree, chi, [](int d) { return 2L * d + 1; });
    out["case"] = "p1";
    out["description"] = "D(C^2) reduced by the Euler field; sl_2 nilpotent cone";
    return out;
  }
  if (which == "p2") {
    Json out = euler_case(3, degree, chi, [](int d) { return static_cast<long>(d + 1) * (d + 1) * (d + 1); });
    out["case"] = "p2";
    out["description"] = "D(C^3) reduced by the Euler field; sl_3 minimal orbit";
    return out;
  }
  if (which == "appendix") {
    Json cases = Json::array();
    bool pass = true;
    const int top = std::max(1, std::min(degree, 3));
    for (int m1 = 1; m1 <= top; ++m1) {
      for (int m2 = 1; m2 <= top; ++m2) {
        const int bad = fourier_identity_failures(m1, m2, chi);
        pass = pass && bad == 0;
        cases.push_back({{"m1", m1}, {"m2", m2}, {"mu1", rational(chi)}, {"mu2", rational(-chi - m1 - m2)}, {"failures", bad}});
      }
    }
    return {{"case", "appendix"}, {"cases", cases}, {"pass", pass}};
  }
  if (which == "seqred") {
    const SeqredReport rep = seqred_check(torus_moment_map(3, {{1, -1, 0}, {0, 1, -1}}, {chi, chi}), 1, degree);
    return {{"case", "seqred"},
            {"degree", degree},
            {"chi", rational(chi)},
            {"left_equals_right", rep.left_equals_right},
            {"first_bad_degree", rep.first_bad_degree},
            {"one_step_dims", rep.one_step_dims},
            {"two_step_dims", rep.two_step_dims},
            {"pass", rep.pass()}};
  }
  throw InputError("unknown qhr case \"" + which + "\" (expected p1, p2, appendix or seqred)");
}

std::vector<std::vector<int>> parse_weight_list(const std::string& text, int rank) {
  if (rank < 2) throw InputError("rank must be at least 2");
  std::vector<std::vector<int>> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> w;
    std::stringstream entries(group);
    std::string e;
    while (std::getline(entries, e, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(e, &used);
        if (e.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(e);
        w.push_back(v);
      } catch (const std::exception&) {
        throw InputError("weights: \"" + e + "\" is not an integer");
      }
    }
    if (static_cast<int>(w.size()) != rank - 1) {
      throw InputError("weights: each weight of sl_" + std::to_string(rank) + " needs " + std::to_string(rank - 1) + " entries");
    }
    out.push_back(std::move(w));
  }
  if (out.empty()) throw InputError("weights: empty list");
  return out;
}

long invdim(int rank, const std::vector<std::vector<int>>& ws) {
  std::vector<DominantWeight> dw;
  for (const auto& w : ws) {
    DominantWeight d;
    d.r = rank;
    d.coeffs = w;
    validate(d);
    dw.push_back(std::move(d));
  }
  return invariant_dim(dw);
}

Json invdim_batch(const Json& batch) {
  if (!batch.is_array()) throw InputError("batch: expected a list of {\"rank\", \"weights\"} objects");
  Json out = Json::array();
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Json& item = batch[i];
    const std::string field = "batch[" + std::to_string(i) + "]";
    if (!item.is_object() || !item.contains("rank") || !item.contains("weights")) {
      throw InputError(field + ": expected {\"rank\": r, \"weights\": [[...], ...]}");
    }
    try {
      out.push_back(invdim(item.at("rank").get<int>(), item.at("weights").get<std::vector<std::vector<int>>>()));
    } catch (const Json::exception& e) {
      throw InputError(field + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  return out;
}

SRAParams sra_params(StarType type, const Rational& t, const Rational& k, const std::optional<ClassFunction>& c) {
  SRAParams p;
  p.t = t;
  p.k = k;
  if (c) {
    validate_class_function(mckay_data(type).group, *c);
    p.c = *c;
  }
  return p;
}

namespace {

Json wreath_json(const FiniteSubgroup& g, const WreathElement& w) {
  Json tuple = Json::array();
  for (int x : w.tuple) tuple.push_back(g.classes[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(x)])].label + "#" + std::to_string(x));
  Json perm = Json::array();
  for (int p : w.perm) perm.push_back(p + 1);
  return {{"perm", perm}, {"tuple", tuple}};
}

Json linexpr_json(const FiniteSubgroup& g, const LinExpr& e) {
  Json out = Json::object();
  if (!e.constant.is_zero()) out["1"] = number(e.constant);
  if (!e.t.is_zero()) out["t"] = number(e.t);
  if (!e.k.is_zero()) out["k"] = number(e.k);
  for (const auto& [cls, v] : e.c) out["c[" + g.classes[static_cast<std::size_t>(cls)].label + "]"] = number(v);
  return out;
}

Vec2 basis_vec(int b) { return b == 0 ? Vec2{CycNumber(1), CycNumber(0)} : Vec2{CycNumber(0), CycNumber(1)}; }

void check_n(int n) {
  if (n < 1 || n > 3) throw InputError("n must be in 1..3");
}

Rational exact_sqrt(const Rational& a) {
  if (a <= 0) throw InputError("scale factors must be positive");
  mpz_class num = a.get_num(), den = a.get_den(), rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (rn * rn != num || rd * rd != den) throw InputError("scale factor " + to_string(a) + " is not the square of a rational");
  return Rational(rn, rd);
}

}  // namespace

Json sra_relators(StarType type, int n, const SRAParams& p) {
  check_n(n);
  const FiniteSubgroup& g = mckay_data(type).group;
  Json out = Json::array();
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const SmashElement r = relator(g, n, l, m, basis_vec(a), basis_vec(b));
          Json terms = Json::array();
          for (const auto& [key, coeff] : r.terms) {
            terms.push_back({{"word", word_to_string(key.first)},
                             {"group", wreath_json(g, key.second)},
                             {"coeff", linexpr_json(g, coeff)},
                             {"value", number(evaluate(coeff, p))}});
          }
          out.push_back({{"l", l + 1}, {"m", m + 1}, {"u", a == 0 ? "e1" : "e2"}, {"v", b == 0 ? "e1" : "e2"}, {"terms", terms}});
        }
      }
    }
  }
  return {{"type", type_name(type)}, {"group", std::string(group_name(g.kind))}, {"n", n},
          {"params", {{"t", rational(p.t)}, {"k", rational(p.k)}}}, {"relators", out}};
}

Json sra_check_scaling(StarType type, int n, const SRAParams& p, const std::vector<Rational>& scales) {
  check_n(n);
  const FiniteSubgroup& g = mckay_data(type).group;
  Json runs = Json::array();
  bool pass = true;
  for (const Rational& a : scales) {
    const Rational b = exact_sqrt(a);
    const bool ok = scaling_check(g, n, b, p);
    pass = pass && ok;
    runs.push_back({{"a", rational(a)}, {"b", rational(b)}, {"pass", ok}});
  }
  return {{"check", "scaling"}, {"type", type_name(type)}, {"n", n}, {"runs", runs}, {"pass", pass}};
}

Json sra_check_equivariance(StarType type, int n, const SRAParams& p, const std::optional<WreathElement>& g_opt) {
  check_n(n);
  const FiniteSubgroup& g = mckay_data(type).group;
  std::vector<WreathElement> elems;
  if (g_opt) {
    elems.push_back(*g_opt);
  } else {
    for (int l = 0; l + 1 < n; ++l) {
      WreathElement s = wreath_identity(n);
      std::swap(s.perm[static_cast<std::size_t>(l)], s.perm[static_cast<std::size_t>(l + 1)]);
      elems.push_back(s);
    }
    for (int x = 1; x < g.order(); ++x) {
      WreathElement e = wreath_identity(n);
      e.tuple[0] = x;
      elems.push_back(e);
    }
  }
  Json runs = Json::array();
  bool pass = true;
  for (const auto& e : elems) {
    const bool ok = equivariance_check(g, n, e, p);
    pass = pass && ok;
    runs.push_back({{"element", wreath_json(g, e)}, {"pass", ok}});
  }
  return {{"check", "equivariance"}, {"type", type_name(type)}, {"n", n}, {"runs", runs}, {"pass", pass}};
}

std::vector<OrbitSpec> parse_orbit_specs(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("specs: expected a non-empty list of {\"r\", \"eigs\"} objects");
  std::vector<OrbitSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "specs[" + std::to_string(i) + "]";
    const Json& o = j[i];
    if (!o.is_object() || !o.contains("r") || !o.contains("eigs") || !o["r"].is_number_integer() || !o["eigs"].is_array()) {
      throw InputError(field + ": expected {\"r\": int, \"eigs\": [[re, im, mult], ...]}");
    }
    OrbitSpec s;
    s.r = o["r"].get<int>();
    for (std::size_t e = 0; e < o["eigs"].size(); ++e) {
      const Json& t = o["eigs"][e];
      if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number() || !t[2].is_number_integer()) {
        throw InputError(field + ".eigs[" + std::to_string(e) + "]: expected [re, im, mult]");
      }
      s.eigenvalues.emplace_back(Complex(t[0].get<double>(), t[1].get<double>()), t[2].get<int>());
    }
    try {
      validate(s);
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<OrbitSpec> orbit_specs_for(StarType type, int n, const Rational& k, const ClassFunction& c) {
  require_rational_lambda(mckay_data(type).group, c);
  std::vector<OrbitSpec> out;
  for (const auto& [p, mu] : main_theorem_params(type, n, k, c).legs) out.push_back(orbit_of_character(p, mu));
  return out;
}

Json ds_solve(const std::vector<OrbitSpec>& specs, const DSOptions& opts) {
  const DSSolution sol = solve(specs, opts);
  Json mats = Json::array();
  for (const auto& m : sol.matrices) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  Json specs_j = Json::array();
  for (const auto& s : specs) {
    Json eigs = Json::array();
    for (const auto& [v, mult] : s.eigenvalues) eigs.push_back(Json::array({v.real(), v.imag(), mult}));
    specs_j.push_back({{"r", s.r}, {"eigs", eigs}});
  }
  Json out = {{"residual", sol.residual},
              {"success", sol.success},
              {"message", sol.message},
              {"best_restart", sol.best_restart},
              {"spectral_residuals", sol.spectral_residuals},
              {"matrices", mats},
              {"specs", specs_j}};
  if (sol.success) {
    const LocalDimension ld = local_dimension(sol.matrices, specs);
    out["dimension"] = ld.determinate ? Json(ld.dimension) : Json("indeterminate");
    out["jacobian_rank"] = ld.jacobian_rank;
    out["gauge"] = ld.gauge;
  } else {
    out["dimension"] = nullptr;
  }
  return out;
}

}  // namespace srt::api
