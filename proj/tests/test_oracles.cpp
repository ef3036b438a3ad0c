#include "cyclo/error.hpp"
#include "cyclo/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cyclo;
using test::c;
using test::dp;
using test::f;
using test::fp;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return make_rational(a, b); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("finite and amenable closed forms") {
  CHECK(predict_xi_hat(c(5)).value == q(1, 5));
  CHECK(predict_xi_hat(c(5)).rule == "finite-order");
  CHECK(predict_xi_hat(dp({f(1), f(1)})).value == 0);
  CHECK(predict_xi_hat(dp({f(1), f(1)})).rule == "infinite-amenable");
  CHECK(predict_xi_hat(test::s3_table()).value == q(1, 6));
  CHECK(predict_xi_hat(dp({c(2), c(2)})).value == q(1, 4));
  CHECK(predict_xi_hat(f(1)).value == 0);
}

TEST_CASE("free groups and free products of free groups") {
  CHECK(predict_xi_hat(f(2)).value == -1);
  CHECK(predict_xi_hat(fp({f(2), f(3)})).value == -4);
  CHECK(predict_xi_hat(fp({f(1), f(2)})).value == -2);
}

TEST_CASE("free products with finite factors") {
  auto c23 = predict_xi_hat(fp({c(2), c(3)}));
  CHECK(c23.unnormalized == q(3, 4));
  CHECK(c23.value == q(-1, 4));
  CHECK(c23.rule == "free-product-finite-subgroup");
  CHECK(predict_xi_hat(fp({c(2), c(4)})).unnormalized == q(2, 3));
  CHECK(predict_xi_hat(fp({fp({c(2), c(4)}), c(3)})).unnormalized == q(3, 4));
  // Infinite dihedral group is amenable.
  auto d = predict_xi_hat(fp({c(2), c(2)}));
  CHECK(d.value == 0);
  CHECK(d.rule == "infinite-amenable");
}

TEST_CASE("psi closed forms") {
  CHECK(predict_psi_hat(c(2)).value == 1);
  CHECK(predict_psi_hat(c(3)).value == q(1, 2));
  CHECK(predict_psi_hat(dp({c(2), c(2)})).value == q(2, 3));
  CHECK(predict_psi_hat(f(2)).value == -1);
  CHECK(predict_psi_hat(fp({c(2), c(3)})).value == 0);
  // Two order-2 generators span a finite subgroup of order 4 in C2 x Z.
  CHECK(predict_psi_hat(dp({c(2), f(1)})).unnormalized == 1);
}

TEST_CASE("predictions stay in range") {
  const std::vector<GroupSpec> specs = {
      c(2), c(7), f(1), f(3), dp({c(3), f(1)}), dp({f(2), c(2)}),
      fp({c(2), c(3), c(5)}), fp({dp({c(2), c(2)}), f(1)}), test::s3_table(),
      fp({test::s3_table(), c(2)}), dp({fp({c(2), c(3)}), c(2)})};
  for (const auto& s : specs) {
    CAPTURE(describe(s));
    const auto p = predict_xi_hat(s);
    const auto n = static_cast<std::int64_t>(facts_of(s).generators);
    CHECK(p.value >= Rational(1 - n));
    CHECK(p.value <= 1);
    CHECK(p.value == Rational(1 - n) + p.unnormalized);
  }
}

TEST_CASE("unsupported cases") {
  auto m = test::tietze_free2();
  CHECK(code_of([&] { predict_xi_hat(m); }) == ErrorCode::kUnsupported);
  CHECK(code_of([] { predict_xi_hat(f(0)); }) == ErrorCode::kUnsupported);
  // {s01, r, s12} is not minimal.
  auto spec = test::s3_table();
  std::get<FiniteTableSpec>(spec.node).generators = {1, 4, 2};
  CHECK(predict_xi_hat(spec).value == q(1, 6));
  CHECK(code_of([&] { predict_psi_hat(spec); }) == ErrorCode::kUnsupported);
  std::get<FiniteTableSpec>(spec.node).generators = {1};
  CHECK(code_of([&] { predict_xi_hat(spec); }) == ErrorCode::kUnsupported);
}

TEST_CASE("facts") {
  CHECK(facts_of(f(2)).amenable == Amenability::kNo);
  CHECK(facts_of(f(2)).free_rank == 2u);
  CHECK(facts_of(fp({c(2), c(2)})).amenable == Amenability::kYes);
  CHECK(facts_of(fp({c(2), c(3)})).amenable == Amenability::kNo);
  CHECK(facts_of(dp({c(2), f(1)})).amenable == Amenability::kYes);
  CHECK_FALSE(facts_of(dp({c(2), f(1)})).free_rank.has_value());
  CHECK(facts_of(test::s3_table()).minimal);
  CHECK(facts_of(test::s3_table()).order == Cardinality::finite(6));
}

TEST_CASE("bound arithmetic") {
  CHECK(girth_theta_bound(2, 2) == q(-7, 8));
  CHECK(girth_theta_bound(2, 4) == q(-51, 52));
  CHECK(girth_theta_bound(3, 2) == q(-23, 12));
  CHECK(circuit_gain_bound(2, 3, q(1, 2), 2) == q(-1, 4));
  CHECK(circuit_gain_bound(2, 2, q(1, 2), 2) == 0);
  CHECK(code_of([] { circuit_gain_bound(2, 1, q(1, 2), 2); }) ==
        ErrorCode::kDivisionByZero);
  CHECK(schreier_upper(-1, 2) == -2);
  CHECK(schreier_upper(q(-1, 2), 3) == q(-3, 2));
  CHECK(direct_product_xi(q(1, 2), q(1, 3), Cardinality::finite(2),
                          Cardinality::finite(3)) == q(1, 6));
}

TEST_CASE("quotient bound") {
  // Z onto C_k: amenable kernel, equality.
  for (std::uint64_t k : {2u, 3u, 7u}) {
    const auto bound = quotient_bound(predict_xi_hat(c(k)).value, Cardinality::finite(k),
                                      Cardinality::infinite());
    CHECK(bound == 0);
    CHECK(bound == predict_xi_hat(f(1)).value);
  }
  // F2 onto Z^2: strict.
  const auto bound = quotient_bound(predict_xi_hat(dp({f(1), f(1)})).value,
                                    Cardinality::infinite(), Cardinality::infinite());
  CHECK(bound == 0);
  CHECK(predict_xi_hat(f(2)).value < bound);
}

TEST_CASE("maximum attained classification") {
  CHECK(xi_maximum_attained(c(6)));
  CHECK(xi_maximum_attained(f(2)));
  CHECK(xi_maximum_attained(fp({c(3), f(2)})));
  CHECK_FALSE(xi_maximum_attained(fp({c(2), c(3)})));
  CHECK_FALSE(xi_maximum_attained(fp({c(2), c(2)})));
  CHECK_FALSE(xi_maximum_attained(dp({f(1), f(1)})));
  CHECK_FALSE(xi_maximum_attained(fp({dp({c(2), f(1)}), f(1)})));
}

TEST_CASE("free product checks pass") {
  const std::vector<GroupSpec> specs = {
      fp({c(2), c(3)}), fp({c(2), c(2)}), fp({c(2), c(4)}), fp({fp({c(2), c(4)}), c(3)}),
      fp({c(2), c(2), c(2)}), fp({c(3), f(2)}), fp({f(1), f(2)}),
      fp({dp({c(2), f(1)}), c(3)}), fp({test::s3_table(), c(2)}), fp({c(2), c(2), f(1)}),
      fp({dp({f(1), f(1)}), c(5)})};
  for (const auto& s : specs) {
    CAPTURE(describe(s));
    const auto checks = free_product_checks(s);
    CHECK(checks.size() >= 4);
    for (const auto& ch : checks) {
      CAPTURE(ch.name);
      CAPTURE(ch.detail);
      CHECK(ch.passed);
    }
  }
  bool saw_routes = false;
  for (const auto& ch : free_product_checks(fp({c(2), c(2)})))
    saw_routes |= ch.name == "routes-agree";
  CHECK(saw_routes);
  CHECK(free_product_checks(c(2)).empty());
}

TEST_CASE("direct product checks pass") {
  const std::vector<GroupSpec> specs = {
      dp({c(2), c(3)}), dp({c(2), f(1)}), dp({f(1), f(1), c(4)}), dp({f(2), c(2)}),
      dp({fp({c(2), c(3)}), c(2)}), dp({test::s3_table(), c(2)})};
  for (const auto& s : specs) {
    CAPTURE(describe(s));
    const auto checks = direct_product_checks(s);
    CHECK(checks.size() >= 2);
    for (const auto& ch : checks) {
      CAPTURE(ch.name);
      CAPTURE(ch.detail);
      CHECK(ch.passed);
    }
  }
}
