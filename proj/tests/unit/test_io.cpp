#include "helpers.hpp"
#include "random_expr.hpp"
#include "sshg/document.hpp"
#include "sshg/error.hpp"
#include "sshg/verifier.hpp"

using namespace sshg;
using namespace sshg::testing;

TEST_CASE("render then parse is the identity on every model object") {
  for (const auto& name : verifier::Sources::object_names()) {
    INFO(name);
    Document doc = verifier::Sources::builtin(name);
    std::string text = render_document(doc);
    Document back = parse_document(text);
    CHECK(render_document(back) == text);
    REQUIRE(back.entries.size() == doc.entries.size());
    for (std::size_t k = 0; k < doc.entries.size(); ++k) {
      CHECK(back.entries[k].label == doc.entries[k].label);
      CHECK(back.entries[k].lhs == doc.entries[k].lhs);
      CHECK(back.entries[k].rhs.has_value() == doc.entries[k].rhs.has_value());
      if (doc.entries[k].rhs) CHECK(*back.entries[k].rhs == *doc.entries[k].rhs);
    }
  }
}

TEST_CASE("render then parse on fuzzed expressions") {
  RandomExpr gen(20261015);
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k) {
    Expression e = gen.any(4);
    if (!(parse_expression(render_expression(e)) == e)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("rendering is deterministic") {
  Expression e = P("g2*g1*exp(phi0) + sigma^(1/2)*r*D^(-1) - omega^3");
  CHECK(render_expression(e) == render_expression(P(render_expression(e))));
  CHECK(render_expression(Expression()) == "0");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expression("sigma + * phi0");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_expression("nosuchsymbol"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/(1 + exp(phi0))"), ParseError);
  CHECK_THROWS_AS(parse_document("(1,1) sigma\n"), ParseError);
}

TEST_CASE("matrix documents") {
  SuperMatrix k = model::defect_matrix(model::defect1());
  CHECK(document_matrix(matrix_document(k)) == k);
  // every entry must be listed, zeros included
  Document d = parse_document("@matrix 3\n@grading even even odd\n(1,1): 1\n");
  CHECK_THROWS_AS(document_matrix(d), ParseError);
}

TEST_CASE("condition and rule documents") {
  auto cs = model::conditions_type2();
  auto back = verifier::document_conditions(verifier::conditions_document(cs), model::ConditionKind::TypeII);
  REQUIRE(back.equations.size() == cs.equations.size());
  for (std::size_t k = 0; k < cs.equations.size(); ++k) CHECK(back.equations[k].residual() == cs.equations[k].residual());
  RewriteSystem rs = model::auxiliary_forward();
  RewriteSystem rb = verifier::document_rules(verifier::rules_document(rs));
  CHECK(rb.size() == rs.size());
  CHECK(substitute(P("f1*ft1 + ft1"), rb) == substitute(P("f1*ft1 + ft1"), rs));
}
