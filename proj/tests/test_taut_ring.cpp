#include <doctest.h>

#include <algorithm>

#include "taut/errors.hpp"
#include "taut/taut_ring.hpp"
#include "test_util.hpp"

using namespace taut;

namespace {
std::string nf(const char* src, int n, int g, Flavor f = Flavor::closed) {
  return to_string(normal_form(parse(src, n, f), TautPresentation(n, g, f)));
}

std::vector<std::string> gen_names(int n, int g, Flavor f) {
  std::vector<std::string> out;
  const TautPresentation pres(n, g, f);
  for (const auto& x : pres.generators()) out.push_back(x.name);
  return out;
}
}  // namespace

TEST_SUITE("taut_ring") {
  TEST_CASE("presentations") {
    using V = std::vector<std::string>;
    CHECK(gen_names(3, 0, Flavor::closed) == V{"K[e*p1]", "K[e*p2]", "K[e*p3]"});
    CHECK(gen_names(3, 1, Flavor::closed).empty());
    CHECK(gen_names(3, 2, Flavor::closed) == V{"K[e*p1]", "K[e*p2]"});
    CHECK(gen_names(3, 1, Flavor::pointed) == V{"c[p1]", "c[p2]"});
    CHECK(gen_names(3, 4, Flavor::pointed) == V{"K[e*p1]", "K[e*p2]"});
    CHECK(gen_names(5, 3, Flavor::disc).empty());
    CHECK(gen_names(2, 0, Flavor::closed) == V{"K[e*p1]", "K[e*p2]"});
    CHECK_THROWS_AS(TautPresentation(2, 2, Flavor::closed), UnsupportedParity);
    CHECK_THROWS_AS(TautPresentation(4, 1, Flavor::pointed), UnsupportedParity);
    CHECK_THROWS_AS(TautPresentation(2, 0, Flavor::disc), UnsupportedParity);
    CHECK_THROWS_AS(TautPresentation(3, 0, Flavor::pointed), UnsupportedCase);
  }

  TEST_CASE("Krull dimensions") {
    for (int n : {3, 5}) {
      CHECK(krull_dimension(TautPresentation(n, 0, Flavor::closed)) == n);
      CHECK(krull_dimension(TautPresentation(n, 1, Flavor::closed)) == 0);
      for (int g : {2, 3, 7}) CHECK(krull_dimension(TautPresentation(n, g, Flavor::closed)) == n - 1);
      CHECK(krull_dimension(TautPresentation(n, 2, Flavor::disc)) == 0);
    }
  }

  TEST_CASE("normal forms") {
    CHECK(nf("k[e*p1*p2]", 3, 2) == "-1/2*K[e*p1]*K[e*p2]");
    CHECK(nf("k[p1]^5 + k[e*p1]", 3, 2) == "K[e*p1]");
    CHECK(nf("c[e]", 3, 1, Flavor::pointed) == "0");
    CHECK(nf("k[e*p1]", 3, 1) == "0");
    CHECK(nf("k[e^3]", 3, 0) == "K[e*p3]");
    CHECK(nf("c[p1]", 3, 5, Flavor::pointed) == "-1/8*K[e*p1]");
    CHECK(nf("k[e]", 3, 4) == "-6");
    CHECK(nf("k[e^3]", 3, 2) == "0");
    CHECK(nf("k[e*p1^2*p2]", 3, 0) == "1/4*K[e*p1]^2*K[e*p2]");
    CHECK(nf("c[p1*p2] + c[e]", 3, 1, Flavor::pointed) == "c[p1]*c[p2]");
    CHECK(nf("k[e] + k[e*p1]", 3, 2, Flavor::disc) == "-2");
    CHECK(nf("k[e^5]", 1, 0) == "1/2*K[e*p1]^2");
  }

  TEST_CASE("flavor and n mismatches") {
    const TautPresentation pres(3, 2, Flavor::closed);
    CHECK_THROWS_AS(normal_form(parse("c[e]", 3, Flavor::pointed), pres), DomainError);
    CHECK_THROWS_AS(normal_form(parse("k[e]", 5, Flavor::closed), pres), DomainError);
  }

  TEST_CASE("audit examples") {
    const auto sphere = BundleModel::sphere(3);
    auto r1 = audit(parse("2*k[e*p1*p2] - k[e*p1]*k[e*p2]", 3, Flavor::closed), sphere);
    CHECK(r1.verdict == Verdict::verified);
    CHECK(r1.witness.is_zero());
    auto r2 = audit(parse("4*k[e*p1*p2] - k[e*p1]*k[e*p2]", 3, Flavor::closed), sphere);
    CHECK(r2.verdict == Verdict::refuted);
    CHECK(to_string(r2.witness) == "4*p1*p2");
    auto r3 = audit(parse("(-4)*(-2)*c[e] + k[e^2]", 3, Flavor::pointed), BundleModel::pointed_liegroup(3, 2));
    CHECK(r3.verdict == Verdict::verified);
    CHECK_THROWS_AS(audit(parse("c[e]", 3, Flavor::pointed), sphere), DomainError);
    CHECK_THROWS_AS(audit(parse("k[e]", 2, Flavor::closed), sphere), DomainError);
  }

  TEST_CASE("relation suite at genus 2") {
    const auto reports = builtin_relation_suite(3, 2);
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) {
      CHECK((r.verdict == Verdict::verified) == r.witness.is_zero());
      if (r.family == "kappa-product-printed") continue;
      INFO(r.family << " " << r.relation << " in " << r.model_label);
      CHECK(r.verdict == Verdict::verified);
    }
    auto has = [&](const std::string& family, const std::string& rel, const std::string& model) {
      return std::any_of(reports.begin(), reports.end(), [&](const AuditReport& r) {
        return r.family == family && r.relation == rel && r.model_label == model && r.verdict == Verdict::verified;
      });
    };
    CHECK(has("euler-product-relation", "4*c[p1] + 2*k[e*p1] + 2*c[e]*k[p1] + k[e^2]*k[p1]",
              "pointed_liegroup(n=3,g=2)"));
    CHECK(has("pointed-class-rewrite", "-2*c[p2] - k[e*p2]", "pointed_liegroup(n=3,g=2)"));
  }

  TEST_CASE("relation suite at genus 0 records the pointed refutation") {
    const auto reports = builtin_relation_suite(3, 0);
    auto find = [&](const std::string& family, const std::string& rel, const std::string& model) {
      auto it = std::find_if(reports.begin(), reports.end(), [&](const AuditReport& r) {
        return r.family == family && r.relation == rel && r.model_label == model;
      });
      REQUIRE(it != reports.end());
      return *it;
    };
    const auto r = find("pointed-class-rewrite", "2*c[e] - k[e^2]", "pointed_sphere(n=3)");
    CHECK(r.verdict == Verdict::refuted);
    CHECK(to_string(r.witness) == "2*e");
    CHECK(find("euler-class-power", "c[e]^3", "pointed_sphere(n=3)").verdict == Verdict::refuted);
    CHECK(find("odd-euler-kappa-power", "k[e^3]^2", "sphere(n=3)").verdict == Verdict::refuted);
    CHECK(find("kappa-product", "2*k[e*p1*p2] - k[e*p1]*k[e*p2]", "sphere(n=3)").verdict == Verdict::verified);
    CHECK(find("kappa-product-printed", "4*k[e*p1*p2] - k[e*p1]*k[e*p2]", "sphere(n=3)").verdict ==
          Verdict::refuted);
  }

  TEST_CASE("normal form degree preservation and oracle consistency at g > 1") {
    testing::Rng rng(23);
    const TautPresentation pres(3, 2, Flavor::closed);
    const auto lie = BundleModel::liegroup(3, 2);
    for (int k = 0; k < 100; ++k) {
      const auto x = testing::random_kappa_expr(rng, 3, 24, false);
      const auto n = normal_form(x, pres);
      CHECK(model_eval(x, lie) == model_eval(n, pres, lie));
    }
    // homogeneous input
    const auto h = parse("k[e*p1*p2] + 3*k[e*p1]*k[e*p2] - k[e^2*p1]^3", 3, Flavor::closed);
    const auto hn = normal_form(h, pres);
    CHECK(hn.is_homogeneous());
    CHECK(*hn.max_degree() == 12);
  }

  TEST_CASE("pointed oracle consistency") {
    testing::Rng rng(29);
    for (int g : {1, 2, 3}) {
      const TautPresentation pres(3, g, Flavor::pointed);
      const auto lie = BundleModel::pointed_liegroup(3, g);
      for (int k = 0; k < 40; ++k) {
        const auto x = testing::random_kappa_expr(rng, 3, 20, true);
        CHECK(model_eval(x, lie) == model_eval(normal_form(x, pres), pres, lie));
      }
    }
  }
}
