#pragma once

// JSON front end shared by the command-line tool and the Python module.
// Rationals are encoded as strings "p/q" (or "p"), cyclotomic numbers as
// {"N": conductor, "coeffs": ["p/q", ...]} in the power basis of Q(zeta_N).
// Keys are sorted, so identical inputs produce byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srt/ds_solver.hpp"
#include "srt/mckay.hpp"
#include "srt/sra.hpp"

namespace srt::api {

using Json = nlohmann::json;

Json rational(const Rational& q);
Json cyc(const CycNumber& z);
/// Rational when z is rational, cyclotomic object otherwise.
Json number(const CycNumber& z);

/// Parses "p/q", "p" or an integer; `field` names the value in errors.
Rational parse_rational_json(const Json& v, const std::string& field);

/// Class function from {"<label>": "p/q", ...}; missing labels are 0. Errors
/// (InputError) name the offending field, prefixed by `source`.
ClassFunction parse_class_function(const Json& j, const FiniteSubgroup& g, const std::string& source = "c");

/// Reads JSON text from a file, or parses `arg` directly if it starts with '{'.
Json load_json_arg(const std::string& arg, const std::string& source);

/// Throws InputError unless c is constant on Galois-conjugate classes.
void require_rational_lambda(const FiniteSubgroup& g, const ClassFunction& c, const std::string& source = "c");

Json mckay(StarType type, const std::optional<ClassFunction>& c);
Json quiver(StarType type, int n, const std::optional<Rational>& k, const std::optional<ClassFunction>& c);
Json weights(StarType type, int n, const Rational& k, const ClassFunction& c);
Json hyperplane(StarType type, int n, const Rational& k, const ClassFunction& c);

/// Cases "p1" (Euler field on C^2, sl_2 nilpotent cone), "p2" (Euler field on
/// C^3, sl_3 minimal orbit), "appendix" (Fourier identity), "seqred" (torus
/// on C^3 with weights (1,-1,0), (0,1,-1)). The report has "pass".
Json qhr_demo(const std::string& which, int degree, const Rational& chi);

/// "a1,a2;b1,b2;..." -> weights of sl_rank.
std::vector<std::vector<int>> parse_weight_list(const std::string& text, int rank);
long invdim(int rank, const std::vector<std::vector<int>>& weights);
/// [{"rank": r, "weights": [[...], ...]}, ...] -> [n, ...].
Json invdim_batch(const Json& batch);

SRAParams sra_params(StarType type, const Rational& t, const Rational& k, const std::optional<ClassFunction>& c);
Json sra_relators(StarType type, int n, const SRAParams& p);
/// Square roots b of the requested scale factors a must be rational.
Json sra_check_scaling(StarType type, int n, const SRAParams& p, const std::vector<Rational>& scales);
/// Without an explicit element: every s_{l,l+1} and every gamma placed at
/// position 1.
Json sra_check_equivariance(StarType type, int n, const SRAParams& p, const std::optional<WreathElement>& g);

std::vector<OrbitSpec> parse_orbit_specs(const Json& j);
/// Orbits p_j, mu_j of the given star type and parameters.
std::vector<OrbitSpec> orbit_specs_for(StarType type, int n, const Rational& k, const ClassFunction& c);
Json ds_solve(const std::vector<OrbitSpec>& specs, const DSOptions& opts);

}  // namespace srt::api
