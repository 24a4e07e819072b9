#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "srt/api.hpp"

namespace py = pybind11;
using srt::api::Json;

namespace {

// Arguments cross the boundary as JSON text; the Python wrapper decodes results.
std::optional<srt::ClassFunction> class_function(const std::optional<std::string>& c, srt::StarType type) {
  if (!c) return std::nullopt;
  return srt::api::parse_class_function(srt::api::load_json_arg(*c, "c"), srt::mckay_data(type).group, "c");
}

srt::ClassFunction class_function_or_zero(const std::optional<std::string>& c, srt::StarType type) {
  return class_function(c, type).value_or(srt::ClassFunction{});
}

srt::Rational rational(const std::string& text, const std::string& name) {
  return srt::api::parse_rational_json(Json(text), name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-level bindings of the srt library";
  py::register_exception<srt::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<srt::MathError>(m, "MathError", PyExc_ArithmeticError);

  m.def("mckay", [](const std::string& group, std::optional<std::string> c) {
    const auto t = srt::parse_star_type(group);
    return srt::api::mckay(t, class_function(c, t)).dump();
  }, py::arg("group"), py::arg("c") = py::none());

  m.def("quiver", [](const std::string& group, int n, std::optional<std::string> k, std::optional<std::string> c) {
    const auto t = srt::parse_star_type(group);
    std::optional<srt::Rational> kk;
    if (k) kk = rational(*k, "k");
    return srt::api::quiver(t, n, kk, class_function(c, t)).dump();
  }, py::arg("group"), py::arg("n"), py::arg("k") = py::none(), py::arg("c") = py::none());

  m.def("weights", [](const std::string& group, int n, const std::string& k, std::optional<std::string> c) {
    const auto t = srt::parse_star_type(group);
    if (n < 1) throw srt::InputError("n must be positive");
    return srt::api::weights(t, n, rational(k, "k"), class_function_or_zero(c, t)).dump();
  }, py::arg("group"), py::arg("n"), py::arg("k"), py::arg("c") = py::none());

  m.def("hyperplane", [](const std::string& group, int n, const std::string& k, std::optional<std::string> c) {
    const auto t = srt::parse_star_type(group);
    if (n < 1) throw srt::InputError("n must be positive");
    return srt::api::hyperplane(t, n, rational(k, "k"), class_function_or_zero(c, t)).dump();
  }, py::arg("group"), py::arg("n"), py::arg("k"), py::arg("c") = py::none());

  m.def("qhr_demo", [](const std::string& which, int degree, const std::string& chi) {
    py::gil_scoped_release release;
    return srt::api::qhr_demo(which, degree, rational(chi, "chi")).dump();
  }, py::arg("case"), py::arg("degree") = 5, py::arg("chi") = "0");

  m.def("invdim", [](int rank, const std::vector<std::vector<int>>& weights) {
    py::gil_scoped_release release;
    return srt::api::invdim(rank, weights);
  }, py::arg("rank"), py::arg("weights"));

  m.def("sra_relators", [](const std::string& group, int n, const std::string& t, const std::string& k, std::optional<std::string> c) {
    const auto type = srt::parse_star_type(group);
    const auto p = srt::api::sra_params(type, rational(t, "t"), rational(k, "k"), class_function(c, type));
    return srt::api::sra_relators(type, n, p).dump();
  }, py::arg("group"), py::arg("n"), py::arg("t") = "1", py::arg("k") = "0", py::arg("c") = py::none());

  m.def("sra_check_scaling", [](const std::string& group, int n, const std::vector<std::string>& scales, const std::string& t,
                                const std::string& k, std::optional<std::string> c) {
    const auto type = srt::parse_star_type(group);
    const auto p = srt::api::sra_params(type, rational(t, "t"), rational(k, "k"), class_function(c, type));
    std::vector<srt::Rational> a;
    for (const auto& s : scales) a.push_back(rational(s, "scales"));
    return srt::api::sra_check_scaling(type, n, p, a).dump();
  }, py::arg("group"), py::arg("n"), py::arg("scales"), py::arg("t") = "1", py::arg("k") = "0", py::arg("c") = py::none());

  m.def("sra_check_equivariance", [](const std::string& group, int n, const std::string& t, const std::string& k,
                                     std::optional<std::string> c) {
    const auto type = srt::parse_star_type(group);
    const auto p = srt::api::sra_params(type, rational(t, "t"), rational(k, "k"), class_function(c, type));
    return srt::api::sra_check_equivariance(type, n, p, std::nullopt).dump();
  }, py::arg("group"), py::arg("n"), py::arg("t") = "1", py::arg("k") = "0", py::arg("c") = py::none());

  m.def("ds_solve", [](const std::string& specs, std::uint64_t seed, int restarts, double tol, int max_iterations, int threads) {
    const auto parsed = srt::api::parse_orbit_specs(srt::api::load_json_arg(specs, "specs"));
    srt::DSOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.tol = tol;
    opts.max_iterations = max_iterations;
    opts.threads = threads;
    py::gil_scoped_release release;
    return srt::api::ds_solve(parsed, opts).dump();
  }, py::arg("specs"), py::arg("seed") = 1, py::arg("restarts") = 8, py::arg("tol") = 1e-10, py::arg("max_iterations") = 400,
     py::arg("threads") = 0);

  m.def("orbit_specs", [](const std::string& group, int n, const std::string& k, std::optional<std::string> c) {
    const auto t = srt::parse_star_type(group);
    Json out = Json::array();
    for (const auto& s : srt::api::orbit_specs_for(t, n, rational(k, "k"), class_function_or_zero(c, t))) {
      Json eigs = Json::array();
      for (const auto& [v, mult] : s.eigenvalues) eigs.push_back(Json::array({v.real(), v.imag(), mult}));
      out.push_back({{"r", s.r}, {"eigs", eigs}});
    }
    return out.dump();
  }, py::arg("group"), py::arg("n"), py::arg("k"), py::arg("c") = py::none());
}
