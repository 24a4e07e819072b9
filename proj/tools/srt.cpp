// srt: JSON front end to the library. Exit codes: 0 success, 1 a check
// failed (or a computation did not converge), 2 invalid input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "pretty.hpp"
#include "srt/api.hpp"
#include "srt/error.hpp"

namespace {

using srt::api::Json;

// TOML through CLI11, or a JSON object whose nested objects are sections.
class TomlOrJsonConfig : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::stringstream buffer;
    buffer << input.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream toml(text);
      return CLI::ConfigTOML::from_config(toml);
    }
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw CLI::ConversionError(std::string("config: malformed JSON (") + e.what() + ")");
    }
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void flatten(const Json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto sub = parents;
        sub.push_back(key);
        flatten(value, sub, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      out.push_back(std::move(item));
    }
  }
};

struct Args {
  bool pretty = false;
  std::string group;
  int n = 1;
  std::string k, t = "1", c;
  std::string qhr_case;
  int degree = 5;
  std::string chi = "0";
  int rank = 0;
  std::string weights, batch;
  std::string scales = "4";
  std::string perm, tuple;
  std::string spec;
  std::uint64_t seed = 1;
  int restarts = 8;
  double tol = 1e-10;
  int max_iterations = 400;
  int threads = 0;
  std::string suite = "all";
  std::uint64_t check_seed = 20240615;
};

srt::Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return srt::parse_rational(text);
  } catch (const srt::InputError& e) {
    throw srt::InputError(flag + ": " + e.what());
  }
}

std::optional<srt::ClassFunction> class_function_arg(const std::string& arg, srt::StarType type) {
  if (arg.empty()) return std::nullopt;
  const auto first = arg.find_first_not_of(" \t");
  const std::string source = first != std::string::npos && arg[first] == '{' ? "--c" : arg;
  return srt::api::parse_class_function(srt::api::load_json_arg(arg, source), srt::mckay_data(type).group, source);
}

std::vector<int> int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw srt::InputError(flag + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

std::vector<srt::Rational> rational_list(const std::string& text, const std::string& flag) {
  std::vector<srt::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_arg(item, flag));
  if (out.empty()) throw srt::InputError(flag + ": empty list");
  return out;
}

void emit(const Json& j, bool pretty) {
  if (pretty) {
    std::cout << srt::tools::pretty(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int passed(const Json& j) { return j.value("pass", true) ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for spherical symplectic reflection algebras of star-shaped type", "srt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<TomlOrJsonConfig>());
  app.set_config("--config", "", "TOML or JSON file mirroring the command-line flags");
  Args a;
  app.add_flag("--pretty", a.pretty, "Human-readable tables instead of JSON");

  const auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", a.group, "Star type: d4, e6, e7 or e8")->required();
  };
  const auto add_n = [&](CLI::App* sub) { sub->add_option("--n", a.n, "Rank n >= 1")->capture_default_str(); };
  const auto add_c = [&](CLI::App* sub) {
    sub->add_option("--c", a.c, "Class function: JSON file (or inline object) mapping class labels to \"p/q\"");
  };

  auto* mckay = app.add_subcommand("mckay", "Character table, McKay graph and lambda(c)");
  add_group(mckay);
  add_c(mckay);

  auto* quiver = app.add_subcommand("quiver", "Calogero-Moser quiver data: delta, partial, alpha, chi, Tits form");
  add_group(quiver);
  add_n(quiver);
  quiver->add_option("--k", a.k, "Parameter k (p/q)");
  add_c(quiver);

  auto* weights = app.add_subcommand("weights", "Parabolics p_j and characters mu_j for each leg");
  auto* hyper = app.add_subcommand("hyperplane", "Value of lambda_o + k(n-1)/2 - 1 and membership in Z>=0");
  for (auto* sub : {weights, hyper}) {
    add_group(sub);
    add_n(sub);
    sub->add_option("--k", a.k, "Parameter k (p/q)")->required();
    add_c(sub);
  }

  auto* qhr = app.add_subcommand("qhr", "Truncated quantum Hamiltonian reductions");
  qhr->require_subcommand(1);
  auto* demo = qhr->add_subcommand("demo", "Built-in reduction cases");
  demo->add_option("--case", a.qhr_case, "p1, p2, appendix or seqred")->required();
  demo->add_option("--degree", a.degree, "Degree bound D (0..8)")->capture_default_str();
  demo->add_option("--chi", a.chi, "Character shift (p/q)")->capture_default_str();

  auto* invdim = app.add_subcommand("invdim", "dim (U_1 (x) ... (x) U_t)^{sl_r}");
  invdim->add_option("--rank", a.rank, "r in sl_r");
  invdim->add_option("--weights", a.weights, "Weights as \"a1,a2,...;b1,b2,...\"");
  invdim->add_option("--batch", a.batch, "JSON file: [{\"rank\": r, \"weights\": [[...], ...]}, ...]");

  auto* sra = app.add_subcommand("sra", "Defining relators of H_{t,k,c}(Gamma_n)");
  sra->require_subcommand(1);
  auto* relators = sra->add_subcommand("relators", "Dump every relator [u_l, v_m] - RHS");
  auto* check_sra = sra->add_subcommand("check", "Structural checks of the relators");
  check_sra->require_subcommand(1);
  auto* scaling = check_sra->add_subcommand("scaling", "u -> b u maps the (a t, a k, a c)-relators to a times the (t, k, c)-relators");
  auto* equiv = check_sra->add_subcommand("equivariance", "Conjugation by Gamma_n preserves the span of the relators");
  for (auto* sub : {relators, scaling, equiv}) {
    add_group(sub);
    add_n(sub);
    sub->add_option("--t", a.t, "Parameter t (p/q)")->capture_default_str();
    sub->add_option("--k", a.k, "Parameter k (p/q), default 0");
    add_c(sub);
  }
  scaling->add_option("--scales", a.scales, "Comma-separated squares a = b^2 of rationals")->capture_default_str();
  equiv->add_option("--perm", a.perm, "Permutation sigma as 1-based images, e.g. \"2,1\"");
  equiv->add_option("--tuple", a.tuple, "Group element indices (gamma_1, ..., gamma_n)");

  auto* ds = app.add_subcommand("ds", "Numerical additive Deligne-Simpson problem");
  ds->require_subcommand(1);
  auto* solve = ds->add_subcommand("solve", "Find A_i in the given orbits with sum A_i = 0");
  solve->add_option("--spec", a.spec, "JSON file (or inline list) of {\"r\", \"eigs\": [[re, im, mult], ...]}");
  solve->add_option("--group", a.group, "Build the orbits from a star type instead of --spec");
  add_n(solve);
  solve->add_option("--k", a.k, "Parameter k (p/q) with --group");
  add_c(solve);
  solve->add_option("--seed", a.seed, "Random seed")->capture_default_str();
  solve->add_option("--restarts", a.restarts, "Number of restarts")->capture_default_str();
  solve->add_option("--tol", a.tol, "Residual tolerance")->capture_default_str();
  solve->add_option("--max-iterations", a.max_iterations, "Iterations per restart")->capture_default_str();
  solve->add_option("--threads", a.threads, "Worker threads (0: SRT_THREADS or all cores)")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run the acceptance criteria");
  check->add_option("--suite", a.suite, "\"all\" or a comma-separated list of criterion numbers")->capture_default_str();
  check->add_option("--seed", a.check_seed, "Seed for the randomized criteria")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto star = [&] { return srt::parse_star_type(a.group); };
    const auto k_or_zero = [&] { return a.k.empty() ? srt::Rational(0) : rational_arg(a.k, "--k"); };

    if (mckay->parsed()) {
      const auto type = star();
      emit(srt::api::mckay(type, class_function_arg(a.c, type)), a.pretty);
      return 0;
    }
    if (quiver->parsed()) {
      const auto type = star();
      std::optional<srt::Rational> k;
      if (!a.k.empty()) k = rational_arg(a.k, "--k");
      emit(srt::api::quiver(type, a.n, k, class_function_arg(a.c, type)), a.pretty);
      return 0;
    }
    if (weights->parsed() || hyper->parsed()) {
      const auto type = star();
      const auto k = rational_arg(a.k, "--k");
      const auto c = class_function_arg(a.c, type).value_or(srt::ClassFunction{});
      if (a.n < 1) throw srt::InputError("--n: must be positive");
      emit(weights->parsed() ? srt::api::weights(type, a.n, k, c) : srt::api::hyperplane(type, a.n, k, c), a.pretty);
      return 0;
    }
    if (demo->parsed()) {
      const Json report = srt::api::qhr_demo(a.qhr_case, a.degree, rational_arg(a.chi, "--chi"));
      emit(report, a.pretty);
      return passed(report);
    }
    if (invdim->parsed()) {
      if (!a.batch.empty()) {
        emit(srt::api::invdim_batch(srt::api::load_json_arg(a.batch, "--batch")), a.pretty);
        return 0;
      }
      if (a.rank == 0 || a.weights.empty()) throw srt::InputError("invdim needs --rank and --weights, or --batch");
      std::cout << srt::api::invdim(a.rank, srt::api::parse_weight_list(a.weights, a.rank)) << "\n";
      return 0;
    }
    if (relators->parsed() || scaling->parsed() || equiv->parsed()) {
      const auto type = star();
      const auto p = srt::api::sra_params(type, rational_arg(a.t, "--t"), k_or_zero(), class_function_arg(a.c, type));
      if (relators->parsed()) {
        emit(srt::api::sra_relators(type, a.n, p), a.pretty);
        return 0;
      }
      Json report;
      if (scaling->parsed()) {
        report = srt::api::sra_check_scaling(type, a.n, p, rational_list(a.scales, "--scales"));
      } else {
        std::optional<srt::WreathElement> g;
        if (!a.perm.empty() || !a.tuple.empty()) {
          srt::WreathElement w = srt::wreath_identity(a.n);
          if (!a.perm.empty()) {
            w.perm = int_list(a.perm, "--perm");
            for (int& x : w.perm) --x;
          }
          if (!a.tuple.empty()) w.tuple = int_list(a.tuple, "--tuple");
          g = w;
        }
        report = srt::api::sra_check_equivariance(type, a.n, p, g);
      }
      emit(report, a.pretty);
      return passed(report);
    }
    if (solve->parsed()) {
      std::vector<srt::OrbitSpec> specs;
      if (!a.spec.empty() == !a.group.empty()) throw srt::InputError("ds solve needs exactly one of --spec and --group");
      if (!a.spec.empty()) {
        specs = srt::api::parse_orbit_specs(srt::api::load_json_arg(a.spec, "--spec"));
      } else {
        const auto type = star();
        specs = srt::api::orbit_specs_for(type, a.n, k_or_zero(), class_function_arg(a.c, type).value_or(srt::ClassFunction{}));
      }
      srt::DSOptions opts;
      opts.seed = a.seed;
      opts.restarts = a.restarts;
      opts.tol = a.tol;
      opts.max_iterations = a.max_iterations;
      opts.threads = a.threads;
      if (opts.restarts < 1 || opts.max_iterations < 1 || !(opts.tol > 0)) {
        throw srt::InputError("--restarts and --max-iterations must be positive, --tol > 0");
      }
      const Json out = srt::api::ds_solve(specs, opts);
      emit(out, a.pretty);
      return out.at("success").get<bool>() ? 0 : 1;
    }
    if (check->parsed()) {
      srt::acceptance::Options opts;
      opts.seed = a.check_seed;
      std::vector<srt::acceptance::Result> results;
      const auto stream = [&](const srt::acceptance::Result& r) {
        if (a.pretty) std::cout << srt::acceptance::format_line(r) << std::endl;
      };
      if (a.suite == "all") {
        results = srt::acceptance::run_all(opts, stream);
      } else {
        for (int id : int_list(a.suite, "--suite")) {
          if (id < 1 || id >= srt::acceptance::kNumCriteria) {
            throw srt::InputError("--suite: criterion ids are 1.." + std::to_string(srt::acceptance::kNumCriteria - 1) +
                                  " (15 is the whole suite)");
          }
          results.push_back(srt::acceptance::run(id, opts));
          stream(results.back());
        }
      }
      bool all = true;
      Json list = Json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"budget_seconds", r.budget}});
      }
      if (!a.pretty) std::cout << Json{{"results", list}, {"pass", all}}.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const srt::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const srt::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
