#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli/commands.hpp"
#include "cli/suites.hpp"
#include "oracles.hpp"

using namespace mot2;
using namespace mot2::cli;

namespace {
RunConfig config_for(const char* group, const char* field) {
  RunConfig c;
  c.group = group;
  c.field = field;
  return c;
}
}  // namespace

TEST_CASE("suite selection") {
  CHECK(resolve_suites({"all"}) == kSuiteNames);
  CHECK(resolve_suites({"blocks,yoshida", "yoshida"}) == std::vector<std::string>{"yoshida", "blocks"});
  CHECK_THROWS_AS(resolve_suites({}), std::invalid_argument);
  CHECK_THROWS_AS(resolve_suites({""}), std::invalid_argument);
  CHECK_THROWS_AS(resolve_suites({"yoshida,nope"}), std::invalid_argument);
}

TEST_CASE("group and field resolution") {
  RunConfig c = config_for("S3", "Fp:7");
  CHECK(resolve_group(c).order() == 6);
  CHECK(resolve_field(c) == Field::prime(7));
  c.group = "G = perm(4): (1 2)(3 4), (1 3)(2 4)";
  CHECK(resolve_group(c).order() == 4);
  c.group = "S4";
  c.max_order = 12;
  CHECK_THROWS_AS(resolve_group(c), std::length_error);
  c.group = "Nope";
  CHECK_THROWS_AS(resolve_group(c), std::invalid_argument);
  c.field = "Fp:6";
  CHECK_THROWS_AS(resolve_field(c), std::invalid_argument);

  const std::string path = "test_cli_group.txt";
  {
    std::ofstream out(path);
    out << "D6 = perm(3): (1 2 3), (1 2)\n";
  }
  RunConfig f;
  f.group_file = path;
  CHECK(resolve_group(f).order() == 6);
  std::remove(path.c_str());
  f.group_file = "does/not/exist";
  CHECK_THROWS_AS(resolve_group(f), std::invalid_argument);
}

TEST_CASE("blocks command") {
  auto s3f2 = cmd_blocks(config_for("S3", "F2"));
  CHECK(s3f2.exit_code == 0);
  CHECK(s3f2.report["blocks"].size() == 2);
  CHECK(s3f2.report["schema"] == kSchemaVersion);
  CHECK(s3f2.report["ok"] == true);
  for (const auto& b : s3f2.report["blocks"]) CHECK(b.contains("lift"));

  auto c1 = cmd_blocks(config_for("C1", "Q"));
  CHECK(c1.exit_code == 0);
  CHECK(c1.report["blocks"].size() == 1);

  auto s3f5 = cmd_blocks(config_for("S3", "Fp:5"));
  CHECK(s3f5.exit_code == 0);
  auto z = center_group_algebra(catalog_group("S3"), Field::prime(5));
  oracle::StructureTable t(3, std::vector<std::vector<std::uint64_t>>(3, std::vector<std::uint64_t>(3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) t[i][j][k] = z.algebra.product(i, j)[k].residue();
  CHECK(s3f5.report["blocks"].size() == oracle::primitive_idempotents_by_enumeration(t, 5).size());
}

TEST_CASE("verify is deterministic for a fixed seed") {
  RunConfig c = config_for("S3", "Q");
  c.suites = {"all"};
  c.seed = 42;
  c.samples = 40;
  auto first = cmd_verify(c);
  auto second = cmd_verify(c);
  CHECK(first.exit_code == 0);
  CHECK(first.report.dump() == second.report.dump());
  c.seed = 43;
  CHECK(cmd_verify(c).report.dump() != first.report.dump());

  RunConfig y = config_for("C4", "F2");
  y.suites = {"yoshida"};
  auto r = cmd_verify(y);
  CHECK(r.exit_code == 0);
  for (const auto& p : r.report["suites"][0]["checks"].back()["detail"]["pairs"])
    CHECK(p["quotient_dimension"] == p["double_cosets"]);

  RunConfig none = config_for("C2", "Q");
  CHECK_THROWS_AS(cmd_verify(none), std::invalid_argument);
}

TEST_CASE("suites report skipped pairs separately") {
  SuiteContext ctx{catalog_group("S3"), Field::rational(), 1, 10};
  auto r = run_suite("mackey-axioms", ctx);
  CHECK(r.passed());
  CHECK(r.skipped() == 0);
  CHECK_THROWS_AS(run_suite("nope", ctx), std::invalid_argument);
}

TEST_CASE("exports") {
  auto x = cmd_export(config_for("S3", "Q"), "xburnside");
  CHECK(x.report["algebra"]["dimension"] == 8);
  CommutativeAlgebra back = algebra_from_json(x.report["algebra"]);
  auto original = crossed_burnside(catalog_group("S3"), Field::rational()).algebra;
  CHECK(back.labels() == original.labels());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(back.product(i, j) == original.product(i, j));
  CHECK(back.identity() == original.identity());

  auto rho = cmd_export(config_for("S3", "Q"), "rho");
  CHECK(rho.report["rho"]["matrix"]["rows"] == 3);
  CHECK(rho.report["rho"]["matrix"]["cols"] == 8);

  auto g = cmd_export(config_for("C2", "Q"), "group");
  CHECK(g.report["group"]["definition"] == "C2 = perm(2): (1 2)");
  CHECK(g.report["group"]["generators"][0] == "(1 2)");

  auto center = cmd_export(config_for("S3", "F3"), "center");
  CHECK(algebra_from_json(center.report["algebra"]).dimension() == 3);
  auto burnside = cmd_export(config_for("S3", "Q"), "burnside");
  CHECK(burnside.report["algebra"]["dimension"] == 4);

  RunConfig m = config_for("S3", "Q");
  auto mackey = cmd_export(m, "mackey");
  CHECK(mackey.report["table"]["values"].size() == 6);
  m.from = 99;
  CHECK_THROWS_AS(cmd_export(m, "mackey"), std::invalid_argument);
  CHECK_THROWS_AS(cmd_export(config_for("S3", "Q"), "bogus"), std::invalid_argument);
}

TEST_CASE("malformed algebra documents are rejected") {
  Json j = Json::parse(R"({"field": "Q", "dimension": 1, "labels": ["a"], "identity": ["1"],
                          "structure": [[0, 0, 0, "1"]]})");
  CHECK(algebra_from_json(j).dimension() == 1);
  j["structure"][0][2] = 3;
  CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);
  j = Json::parse(R"({"field": "Q", "dimension": 2, "labels": ["a"], "identity": ["1"], "structure": []})");
  CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);
  j = Json::parse(R"({"field": "Q", "labels": ["a"]})");
  CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);
}
