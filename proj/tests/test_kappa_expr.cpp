#include <doctest.h>

#include "taut/errors.hpp"
#include "taut/kappa_expr.hpp"
#include "test_util.hpp"

using namespace taut;

namespace {
std::vector<std::string> leaves(const KappaExpr& x) {
  std::vector<std::string> out;
  x.for_each_leaf([&](const node::Leaf& l) {
    out.push_back((l.kind == LeafKind::kappa ? "k:" : "c:") + l.mono.to_string());
  });
  return out;
}
}  // namespace

TEST_SUITE("kappa_expr") {
  TEST_CASE("grammar") {
    CHECK(leaves(parse("k[e*p1]^2 - 3*k[p2]", 3, Flavor::closed)) == std::vector<std::string>{"k:e*p1", "k:p2"});
    CHECK(leaves(parse("k[e^3]", 3, Flavor::closed)) == std::vector<std::string>{"k:e^3"});
    CHECK(leaves(parse("k[p3]", 3, Flavor::closed)) == std::vector<std::string>{"k:e^2"});
    CHECK(leaves(parse(" K[ e * p1 ] ", 3, Flavor::closed)) == std::vector<std::string>{"k:e*p1"});
    CHECK(leaves(parse("c[1] + k[1]", 2, Flavor::pointed)) == std::vector<std::string>{"c:1", "k:1"});
    CHECK(parse("-k[e]", 3, Flavor::closed).to_string() == "-k[e]");
    CHECK(parse("(1/2)*k[e*p1]^2 - 3", 3, Flavor::closed).to_string() == "(1/2)*k[e*p1]^2 - 3");
  }

  TEST_CASE("errors carry positions") {
    try {
      (void)parse("k[e*p4]", 3, Flavor::closed);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse("c[e]", 3, Flavor::closed), ParseError);
    CHECK_THROWS_AS(parse("k[e*p0]", 3, Flavor::closed), ParseError);
    CHECK_THROWS_AS(parse("k[e] +", 3, Flavor::closed), ParseError);
    CHECK_THROWS_AS(parse("k[q]", 3, Flavor::closed), ParseError);
    CHECK_THROWS_AS(parse("1/0", 3, Flavor::closed), ParseError);
    CHECK_THROWS_AS(parse("", 3, Flavor::closed), ParseError);
  }

  TEST_CASE("rendering re-parses to the same tree") {
    testing::Rng rng(17);
    for (int k = 0; k < 100; ++k) {
      const auto x = testing::random_kappa_expr(rng, 3, 24, k % 2 == 0);
      const auto text = x.to_string();
      CHECK(parse(text, 3, Flavor::pointed).to_string() == text);
    }
  }

  TEST_CASE("evaluation respects the degree cap") {
    const auto x = parse("k[e*p2]^4", 3, Flavor::closed);
    auto t = pontrjagin_table(3);
    LeafEvaluator v = [&](const node::Leaf&) { return GradedPoly::generator(t, "p2"); };
    CHECK(to_string(evaluate(x, t, v, 32)) == "p2^4");
    CHECK_THROWS_AS(evaluate(x, t, v, 24), ResourceError);
  }
}
