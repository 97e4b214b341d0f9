#include <filesystem>

#include "helpers.hpp"
#include "sshg/cli.hpp"
#include "sshg/verifier.hpp"

using namespace sshg;
using namespace sshg::verifier;
using namespace sshg::testing;

namespace {
std::filesystem::path golden_dir() { return SSHG_TEST_GOLDEN_DIR; }
}  // namespace

TEST_CASE("fusion product passes with pinned discrepancies") {
  ResidualReport r = check_fusion_product(Sources());
  CHECK(r.status == Status::Pass);
  CHECK(r.residuals.empty());
  CHECK(r.normalization == Expression(1));
  std::size_t pinned = 0;
  for (const auto& n : r.notes) pinned += n.rfind("pinned discrepancy", 0) == 0;
  CHECK(pinned == model::fused_errata().size());
}

TEST_CASE("order of the factors matters") {
  ResidualReport r = check_fusion_product_reversed(Sources());
  CHECK(r.status == Status::Fail);
  bool has_12 = false;
  for (const auto& x : r.residuals) has_12 = has_12 || x.label == "(1,2)";
  CHECK(has_12);
}

TEST_CASE("build_report sorts by name") {
  std::vector<ResidualReport> in(3);
  in[0].check = "zero-curvature";
  in[1].check = "composition";
  in[2].check = "el-type1";
  auto out = build_report(in);
  CHECK(out[0].check == "composition");
  CHECK(out[2].check == "zero-curvature");
  CHECK(build_report({}).empty());
}

TEST_CASE("check registry") {
  const auto& names = check_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() == 8);
  CHECK_THROWS(run_check("no-such-check", Sources(), CheckOptions{}));
}

TEST_CASE("solve mode lists the chirality split of the auxiliary field") {
  ResidualReport r = check_defect_matrix(Sources(), CheckOptions{Mode::Solve, true});
  CHECK(r.status == Status::PassWithAssignment);
  std::map<std::string, Expression> a;
  for (const auto& x : r.assignments) a[x.label] = x.value;
  REQUIRE(a.count("dpg1"));
  REQUIRE(a.count("dmg1"));
  // assignments are written over the oriented variables (psi0, psib0 eliminated)
  model::ConditionSet cs = model::conditions_type1(model::defect1());
  RewriteSystem rules = model::orient_type1(cs, model::defect1()).rules;
  // d-g1 ~ cosh((phi0 - phi1)/2)(psi0 - psi1), d+g1 ~ cosh((phi0 + phi1)/2)(psib0 + psib1)
  CHECK(scalar_ratio(a["dmg1"], substitute(P("(2/sigma1)^(1/2)*cosh((phi0 - phi1)/2)*(psi0 - psi1)"), rules)));
  CHECK(scalar_ratio(a["dpg1"], substitute(P("(2*sigma1)^(1/2)*cosh((phi0 + phi1)/2)*(psib0 + psib1)"), rules)));
  // d+g1 - d-g1 = dt g1
  CHECK(a["dpg1"] - a["dmg1"] == substitute(cs.find("aux-dt")->rhs, rules));
}

TEST_CASE("posit mode reads the split from the golden objects") {
  ResidualReport r = check_defect_matrix(Sources(), CheckOptions{Mode::Posit, true});
  CHECK(r.status == Status::Pass);
}

TEST_CASE("zero curvature needs no normalization") {
  ResidualReport r = check_zero_curvature(Sources(), CheckOptions{});
  CHECK(r.status == Status::Pass);
  CHECK(r.normalization == Expression(1));
  ResidualReport strict = check_zero_curvature(Sources(), CheckOptions{Mode::Solve, false});
  CHECK(strict.status == Status::Pass);
}

TEST_CASE("lambda sectors") {
  auto s = lambda_sectors(P("lambda^(1/2)*sigma + lambda^(-1/2) + 3*lambda^(1/2)*tau"));
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == -1);
  CHECK(s[1].first == 1);
  CHECK(s[1].second == P("lambda^(1/2)*(sigma + 3*tau)"));
}

TEST_CASE("scalar ratio") {
  CHECK(*scalar_ratio(P("2*i*sigma + 2*i*tau"), P("sigma + tau")) == CycloScalar(2) * CycloScalar::i());
  CHECK_FALSE(scalar_ratio(P("sigma"), P("sigma + tau")));
}

TEST_CASE("Type-I conditions are reproduced") {
  ResidualReport r = check_el_type1(Sources());
  CHECK(r.status == Status::Pass);
  REQUIRE(r.recombination);
  CHECK(r.recombination->rows.size() == 5);
}

TEST_CASE("Type-II: the open row is localized to one coefficient") {
  ResidualReport r = check_el_type2(Sources());
  CHECK(r.status == Status::Fail);
  REQUIRE(r.residuals.size() >= 1);
  bool localized = false;
  for (const auto& n : r.notes) localized = localized || n.find("localized: phi-sum") != std::string::npos;
  CHECK(localized);
}

TEST_CASE("reparametrized fused matrix reports an obstruction, non-blocking") {
  ResidualReport r = check_reparametrized_k2(Sources(), CheckOptions{});
  CHECK_FALSE(r.blocking);
  CHECK((r.status == Status::PassWithAssignment || r.status == Status::ObstructionReported));
  CHECK_FALSE(r.failing(false));
  CHECK(r.failing(true) == !r.passed());
}

TEST_CASE("golden files are the built-in objects") {
  REQUIRE(std::filesystem::is_directory(golden_dir()));
  Sources golden(golden_dir());
  for (const auto& name : Sources::object_names()) {
    INFO(name);
    CHECK(render_document(golden.document(name)) == render_document(Sources::builtin(name)));
  }
}

TEST_CASE("suite config") {
  auto all = cli::resolve_checks({"all"});
  CHECK(all == check_names());
  CHECK(cli::resolve_checks({"el-type1", "composition", "el-type1"}) ==
        std::vector<std::string>{"composition", "el-type1"});
  CHECK_THROWS_AS(cli::resolve_checks({"nope"}), cli::ConfigError);
  cli::SuiteConfig cfg;
  cfg.checks = {"fusion-product"};
  cfg.golden = "/nonexistent/golden";
  CHECK_THROWS_AS(cli::run_suite(cfg), cli::ConfigError);
}

TEST_CASE("exit status honours strict for non-blocking checks") {
  ResidualReport soft;
  soft.check = "x";
  soft.blocking = false;
  soft.status = Status::ObstructionReported;
  CHECK(cli::exit_status({soft}, false) == 0);
  CHECK(cli::exit_status({soft}, true) == 1);
  ResidualReport hard;
  hard.check = "y";
  hard.status = Status::Fail;
  CHECK(cli::exit_status({hard}, false) == 1);
  CHECK(cli::exit_status({}, true) == 0);
}
