#include <filesystem>
#include <fstream>
#include <optional>

#include "doctest.h"
#include "kaz/cli.hpp"
#include "kaz/error.hpp"
#include "kaz/rational.hpp"

using kaz::cli::Json;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::filesystem::path(KAZ_EXAMPLES_DIR) / name);
  REQUIRE(in);
  return Json::parse(in);
}

// Every string leaf that parses as a rational prints back identically.
void check_rational_leaves(const Json& doc) {
  if (doc.is_object() || doc.is_array()) {
    for (const auto& v : doc) check_rational_leaves(v);
  } else if (doc.is_string()) {
    const std::string s = doc.get<std::string>();
    std::optional<kaz::Rational> q;
    try {
      q = kaz::parse_rational(s);
    } catch (const kaz::UserError&) {
      return;  // not a number: tags such as "ok" or formula names
    }
    CHECK(kaz::to_string(*q) == s);
  }
}

const std::vector<std::pair<std::string, std::string>> kCases{
    {"kazarnovskii", "kazarnovskii_sl2.json"}, {"bk", "bk_triangle.json"},
    {"gc", "gc_gl3.json"},                     {"moment-polytope", "moment_gl2.json"},
    {"hilbert", "hilbert_sl2.json"},           {"tensor", "tensor_gl3.json"},
    {"prv-check", "prv_sl3.json"},             {"verify", "verify_gl2.json"},
    {"newton-gl", "newton_gl2.json"},          {"mixed-volume", "mixed_volume.json"},
    {"mixed-integral", "mixed_integral.json"}, {"hull", "hull.json"},
    {"completion", "completion_torus.json"},   {"weight-polytope", "weight_sl2.json"},
};

}  // namespace

TEST_CASE("documented command examples") {
  CHECK(kaz::cli::run("kazarnovskii", load("kazarnovskii_sl2.json"))["value"] == "2");
  CHECK(kaz::cli::run("bk", load("bk_triangle.json")) == Json{{"value", "1"}});
  auto gc = kaz::cli::run("gc", load("gc_gl3.json"));
  CHECK(gc["lattice_points"] == "8");
  CHECK(gc["dim_check"] == "ok");
  auto mp = kaz::cli::run("moment-polytope", load("moment_gl2.json"));
  CHECK(mp["vertices"] == Json::parse(R"([["1/2","1/2"],["1","0"]])"));
}

TEST_CASE("every command is covered and results round-trip exactly") {
  CHECK(kaz::cli::commands().size() == kCases.size());
  for (const auto& [cmd, file] : kCases) {
    CAPTURE(cmd);
    Json out = kaz::cli::run(cmd, load(file));
    Json reread = Json::parse(kaz::cli::serialize(out));
    CHECK(reread == out);
    CHECK(kaz::cli::serialize(reread) == kaz::cli::serialize(out));
    check_rational_leaves(out);
  }
}

TEST_CASE("same input and seed give byte-identical output") {
  for (const auto& [cmd, file] : kCases) {
    CAPTURE(cmd);
    kaz::cli::RunOptions opt{12345, std::nullopt};
    CHECK(kaz::cli::serialize(kaz::cli::run(cmd, load(file), opt)) ==
          kaz::cli::serialize(kaz::cli::run(cmd, load(file), opt)));
  }
  Json v = Json::parse(R"({"group":[{"type":"SL","n":3}],"trials":5})");
  auto a = kaz::cli::serialize(kaz::cli::run("verify", v, {1, std::nullopt}));
  auto b = kaz::cli::serialize(kaz::cli::run("verify", v, {1, std::nullopt}));
  CHECK(a == b);
}

TEST_CASE("malformed input is a user error") {
  using kaz::UserError;
  CHECK_THROWS_AS(kaz::cli::run("nope", Json::object()), UserError);
  CHECK_THROWS_AS(kaz::cli::run("hull", Json::array()), UserError);
  CHECK_THROWS_AS(kaz::cli::run("hull", Json::object()), UserError);
  CHECK_THROWS_AS(kaz::cli::run("hull", Json::parse(R"({"points":[[1,"x"]]})")), UserError);
  CHECK_THROWS_AS(kaz::cli::run("hull", Json::parse(R"({"points":[[1.5]]})")), UserError);
  CHECK_THROWS_AS(kaz::cli::run("kazarnovskii", Json::parse(R"({"group":[{"type":"SO","n":3}],"weight_sets":[]})")),
                  UserError);
  CHECK_THROWS_AS(kaz::cli::run("kazarnovskii", Json::parse(R"({"group":[{"type":"SL","n":2}],"weight_sets":[[[1]]]})")),
                  UserError);
  CHECK_THROWS_AS(kaz::cli::run("gc", Json::parse(R"({"n":2,"lambda":[0,1]})")), UserError);
  CHECK_THROWS_AS(kaz::cli::run("newton-gl", Json::parse(R"({"group":[{"type":"GL","n":4}],"weights":[[1,0,0,0]]})")),
                  UserError);
  CHECK(kaz::cli::error_document("user_error", "m") == Json::parse(R"({"error":{"kind":"user_error","message":"m"}})"));
}

TEST_CASE("k-max truncates the Hilbert schedule") {
  auto out = kaz::cli::run("hilbert", load("hilbert_sl2.json"), {1, 20});
  REQUIRE(out["samples"].size() == 2);
  CHECK(out["samples"][1]["k"] == 20);
  CHECK(out["samples"][1]["H"] == "3311");
}
