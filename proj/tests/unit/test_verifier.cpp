#include <doctest.h>

#include "doctest_poly.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/verifier.hpp"

using namespace qkgr;

TEST_CASE("reports") {
  auto sp = VarSpace::of_names({"x"});
  CheckReport r;
  r.name = "demo";
  r.expect_zero(Poly(sp), "first");
  CHECK(r.passed);
  CHECK_FALSE(r.witness.has_value());
  r.expect_zero(Poly::variable(sp, "x") - 1, "second");
  r.expect_zero(Poly::variable(sp, "x"), "third");
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == "x - 1");
  CHECK(r.details["witness_at"] == "second");
  auto j = r.to_json();
  CHECK(j["status"] == "fail");
  CHECK(j["check"] == "demo");
  CHECK(j["details"]["failures"].size() == 2);
}

TEST_CASE("modes and names") {
  CHECK(parse_check_mode("auto") == CheckMode::kAuto);
  CHECK(parse_check_mode("numeric") == CheckMode::kNumeric);
  CHECK(check_mode_name(CheckMode::kSymbolic) == "symbolic");
  CHECK_THROWS_AS(parse_check_mode("fast"), InvalidArgument);
  const auto& names = check_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() == 13);
  CHECK(check_applies("projective", 1, 4));
  CHECK_FALSE(check_applies("projective", 2, 4));
  CHECK_FALSE(check_applies("rank", 4, 4));
  CHECK_THROWS_AS(run_check("nope", 2, 4, {}), InvalidArgument);
  CHECK_THROWS_AS(run_check("projective", 2, 4, {}), InvalidArgument);
}

TEST_CASE("every check passes on small Grassmannians") {
  VerifyOptions o;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 5}}) {
    for (const auto& name : check_names()) {
      if (!check_applies(name, k, n)) continue;
      CAPTURE(name);
      CAPTURE(k);
      CAPTURE(n);
      auto r = run_check(name, k, n, o);
      CHECK(r.passed);
      CHECK(r.k == k);
      CHECK(r.n == n);
      CHECK(r.to_json()["status"] == "pass");
    }
  }
}

TEST_CASE("escalation and numeric mode") {
  VerifyOptions o;
  o.symbolic_max_vars = 0;
  auto r = check_presentation_equivalence(2, 4, o);
  CHECK(r.passed);
  CHECK(r.mode.find("numeric") != std::string::npos);
  CHECK(r.details["points"].size() == 3);

  o.mode = CheckMode::kNumeric;
  o.draws = 2;
  o.seed = 10;
  auto q = check_qdual_membership(2, 4, o);
  CHECK(q.passed);
  CHECK(q.details["points"].size() == 2);
  CHECK(q.details["unit_at_points"].size() == 2);

  o = VerifyOptions{};
  o.mode = CheckMode::kSymbolic;
  auto s = check_presentation_equivalence(2, 4, o);
  CHECK(s.passed);
  CHECK(s.mode.find("symbolic") != std::string::npos);

  // a symbolic run that cannot finish within the budget is an error in symbolic mode
  o.groebner.max_pairs = 2;
  CHECK_THROWS_AS(check_presentation_equivalence(2, 4, o), ResourceLimit);
}

TEST_CASE("rank reports binomial coefficients") {
  for (auto [k, n, expected] : std::vector<std::tuple<int, int, long>>{{1, 4, 4}, {2, 4, 6}, {2, 5, 10}, {3, 4, 4}}) {
    auto r = check_rank(k, n, {});
    CHECK(r.passed);
    CHECK(r.details["expected"] == expected);
    for (const auto& [at, d] : r.details["dimensions"].items()) CHECK(d == expected);
  }
}
