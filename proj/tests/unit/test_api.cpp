#include <doctest.h>

#include <functional>

#include "srt/api.hpp"

using namespace srt;
using srt::api::Json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("api") {
  TEST_CASE("McKay report") {
    const Json j = api::mckay(StarType::D4, std::nullopt);
    CHECK(j["irreducibles"] == 5);
    CHECK(j["order"] == 8);
    CHECK(j.dump() == api::mckay(StarType::D4, std::nullopt).dump());
    const auto& g = mckay_data(StarType::D4).group;
    const Json with_c = api::mckay(StarType::D4, api::parse_class_function(Json{{"2a", "8"}}, g));
    CHECK(with_c["lambda"]["coords"]["n"] == "-7/4");
    CHECK(with_c["lambda"]["pairing_with_delta"] == "1");
  }

  TEST_CASE("class function errors name the field") {
    const auto& g = mckay_data(StarType::E6).group;
    CHECK(error_of([&] { api::parse_class_function(Json{{"2a", "one"}}, g, "c.json"); }).find("c.json: field \"2a\"") == 0);
    CHECK(error_of([&] { api::parse_class_function(Json{{"7q", "1"}}, g, "c.json"); }).find("\"7q\"") != std::string::npos);
    CHECK(error_of([&] { api::parse_class_function(Json{{"1a", "1"}}, g, "c.json"); }).find("\"1a\"") != std::string::npos);
    CHECK_FALSE(error_of([&] { api::parse_class_function(Json::array(), g, "c.json"); }).empty());
    CHECK_FALSE(error_of([&] { api::load_json_arg("{\"2a\": ", "c.json"); }).empty());
    CHECK(api::load_json_arg("{\"2a\": \"1/2\"}", "c")["2a"] == "1/2");
  }

  TEST_CASE("Galois-inconsistent c is rejected before computing weights") {
    const auto& g = mckay_data(StarType::E7).group;
    const auto orbits = rational_classes(g);
    for (const auto& orbit : orbits) {
      if (orbit.size() < 2) continue;
      ClassFunction c;
      c.values[orbit.front()] = 1;
      CHECK_THROWS_AS(api::weights(StarType::E7, 1, 0, c), InputError);
      CHECK_THROWS_AS(api::hyperplane(StarType::E7, 1, 0, c), InputError);
    }
  }

  TEST_CASE("weights and hyperplane") {
    const Json w = api::weights(StarType::E6, 1, make_rational(1, 2), {});
    CHECK(w.size() == 3);
    CHECK(w[2]["kind"] == "p'");
    const Json h = api::hyperplane(StarType::D4, 1, 0, {});
    CHECK(h["value"] == "-7/8");
    CHECK(h["on_hyperplane"] == false);
  }

  TEST_CASE("invdim front end") {
    CHECK(api::invdim(2, api::parse_weight_list("1;1;1;1", 2)) == 2);
    CHECK(api::invdim_batch(Json::parse(R"([{"rank": 3, "weights": [[1, 0], [0, 1]]}])"))[0] == 1);
    CHECK_THROWS_AS(api::parse_weight_list("1,2", 2), InputError);
    CHECK_THROWS_AS(api::parse_weight_list("x", 2), InputError);
  }

  TEST_CASE("orbit specs") {
    const auto specs = api::parse_orbit_specs(Json::parse(R"([{"r": 2, "eigs": [[1, 0, 1], [-1, 0, 1]]}])"));
    CHECK(specs.size() == 1);
    CHECK(error_of([] { api::parse_orbit_specs(Json::parse(R"([{"r": 2, "eigs": [[1, 0]]}])")); }).find("specs[0].eigs[0]") == 0);
  }

  TEST_CASE("qhr demos pass") {
    for (const char* c : {"p1", "p2", "appendix", "seqred"}) CHECK(api::qhr_demo(c, 3, make_rational(1, 3))["pass"] == true);
    CHECK_THROWS_AS(api::qhr_demo("nope", 3, 0), InputError);
  }

  TEST_CASE("sra scaling needs rational square roots") {
    const auto p = api::sra_params(StarType::D4, 1, 0, std::nullopt);
    CHECK(api::sra_check_scaling(StarType::D4, 1, p, {4, make_rational(9, 4)})["pass"] == true);
    CHECK_THROWS_AS(api::sra_check_scaling(StarType::D4, 1, p, {2}), InputError);
  }
}
