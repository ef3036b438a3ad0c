#include <random>

#include "cyclo/error.hpp"
#include "cyclo/group.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cyclo;

namespace {

Element random_element(const MarkedGroup& m, std::mt19937& rng, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, m.rank() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back({m.symbol(pick(rng)), sign(rng) ? 1 : -1});
  return m.evaluate_word(w);
}

std::vector<GroupSpec> backend_matrix() {
  return {
      GroupSpec::cyclic(7),
      test::s3_table(),
      GroupSpec::free(2),
      GroupSpec::direct_product({GroupSpec::cyclic(4), GroupSpec::free(1)}),
      GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}),
      GroupSpec::free_product(
          {GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}),
           GroupSpec::free(1), test::s3_table()}),
  };
}

}  // namespace

TEST_CASE("group laws hold on random words for every backend") {
  std::mt19937 rng(17);
  for (const auto& spec : backend_matrix()) {
    CAPTURE(describe(spec));
    auto g = make_group(spec);
    auto m = MarkedGroup::default_marking(g);
    for (int t = 0; t < 200; ++t) {
      const Element a = random_element(m, rng, 8);
      const Element b = random_element(m, rng, 8);
      const Element c = random_element(m, rng, 8);
      REQUIRE(g->contains(a));
      CHECK(g->multiply(a, g->inverse(a)) == g->identity());
      CHECK(g->multiply(g->inverse(a), a) == g->identity());
      CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
      CHECK(g->multiply(a, g->identity()) == a);
      CHECK(g->multiply(g->identity(), a) == a);
    }
  }
}

TEST_CASE("products of canonical elements are canonical") {
  std::mt19937 rng(5);
  for (const auto& spec : backend_matrix()) {
    auto g = make_group(spec);
    auto m = MarkedGroup::default_marking(g);
    for (int t = 0; t < 100; ++t) {
      const Element a = random_element(m, rng, 6);
      const Element p = g->multiply(a, random_element(m, rng, 6));
      CHECK(g->contains(p));
    }
  }
}

TEST_CASE("free product syllable length is subadditive") {
  std::mt19937 rng(9);
  auto g = make_group(GroupSpec::free_product(
      {GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::free(1)}));
  auto m = MarkedGroup::default_marking(g);
  auto syllables = [&](const Element& e) {
    std::size_t count = 0;
    for (std::size_t pos = 0; pos < e.tokens().size();
         pos += 2 + static_cast<std::size_t>(e.tokens()[pos + 1]))
      ++count;
    return count;
  };
  for (int t = 0; t < 200; ++t) {
    std::size_t total = 0;
    Element acc = g->identity();
    for (int k = 0; k < 4; ++k) {
      const Element e = random_element(m, rng, 5);
      total += syllables(e);
      acc = g->multiply(acc, e);
    }
    CHECK(syllables(acc) <= total);
  }
}

TEST_CASE("order agrees with enumeration for small finite specs") {
  const std::vector<GroupSpec> specs = {
      GroupSpec::cyclic(1), GroupSpec::cyclic(2), GroupSpec::cyclic(12),
      test::s3_table(),
      GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}),
      GroupSpec::direct_product(
          {GroupSpec::cyclic(3), test::s3_table(), GroupSpec::cyclic(2)}),
      GroupSpec::free_product({GroupSpec::cyclic(5)}),
      GroupSpec::free(0),
  };
  for (const auto& spec : specs) {
    CAPTURE(describe(spec));
    auto g = make_group(spec);
    const auto order = order_of(g);
    REQUIRE(order.is_finite());
    REQUIRE(order.value() <= 64);
    const auto gens = g->default_generators();
    CHECK(generated_order(*g, gens, 1000) == order.value());
    CHECK(structural_order(spec) == order);
  }
}

TEST_CASE("structural orders") {
  CHECK(order_of(make_group(GroupSpec::cyclic(4))).value() == 4);
  CHECK_FALSE(order_of(make_group(GroupSpec::free(2))).is_finite());
  CHECK(order_of(make_group(GroupSpec::direct_product(
                     {GroupSpec::cyclic(2), GroupSpec::cyclic(2)})))
            .value() == 4);
  CHECK_FALSE(order_of(make_group(GroupSpec::free_product(
                           {GroupSpec::cyclic(2), GroupSpec::cyclic(3)})))
                  .is_finite());
  CHECK_FALSE(order_of(make_group(GroupSpec::free_product(
                           {GroupSpec::cyclic(2), GroupSpec::cyclic(2)})))
                  .is_finite());
}

TEST_CASE("multiplication examples") {
  auto c4 = make_group(GroupSpec::cyclic(4));
  CHECK(c4->multiply(Element({3}), Element({2})) == Element({1}));

  auto f2 = make_group(GroupSpec::free(2));
  auto m = MarkedGroup::from_generators(
      f2, {{"x", Element({1})}, {"y", Element({2})}});
  const Element xy = m.evaluate_word(Word{{"x", 1}, {"y", 1}});
  const Element yinv_x = m.evaluate_word(Word{{"y", -1}, {"x", 1}});
  CHECK(f2->format(f2->multiply(xy, yinv_x)) == "aa");
  CHECK(f2->format(xy) == "ab");
  CHECK(m.evaluate_word(Word{}) == f2->identity());

  auto c23 = make_group(
      GroupSpec::free_product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}));
  const Element a = c23->default_generators()[0];
  CHECK(c23->multiply(a, a) == c23->identity());

  auto c3 = make_group(GroupSpec::cyclic(3));
  auto mt = MarkedGroup::from_generators(c3, {{"t", Element({1})}});
  CHECK(mt.evaluate_word(Word{{"t", 1}, {"t", 1}, {"t", 1}, {"t", 1}}) ==
        Element({1}));
}

TEST_CASE("invalid specs and markings are rejected") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of([] { make_group(GroupSpec::cyclic(0)); }) == ErrorCode::kInvalidSpec);
  CHECK(code_of([] { make_group(GroupSpec::direct_product({})); }) ==
        ErrorCode::kInvalidSpec);
  CHECK(code_of([] {
          make_group(GroupSpec::free_product({GroupSpec::cyclic(1), GroupSpec::cyclic(2)}));
        }) == ErrorCode::kTrivialFreeProductFactor);
  CHECK(code_of([] {
          make_group(GroupSpec::free_product({GroupSpec::free(0), GroupSpec::cyclic(2)}));
        }) == ErrorCode::kTrivialFreeProductFactor);

  FiniteTableSpec bad;
  bad.names = {"e", "a", "b"};
  bad.table = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  CHECK(code_of([&] { make_group(GroupSpec::finite_table(bad)); }) ==
        ErrorCode::kInvalidTable);

  auto c4 = make_group(GroupSpec::cyclic(4));
  CHECK(code_of([&] { MarkedGroup::from_generators(c4, {{"t", Element({0})}}); }) ==
        ErrorCode::kIdentityGenerator);
  CHECK(code_of([&] { MarkedGroup::from_generators(c4, {}); }) ==
        ErrorCode::kInvalidSpec);
  CHECK(code_of([&] {
          MarkedGroup::from_generators(c4, {{"t", Element({1})}, {"t", Element({2})}});
        }) == ErrorCode::kInvalidSpec);
  CHECK(code_of([&] { c4->multiply(Element({9}), Element({1})); }) ==
        ErrorCode::kBackendMismatch);
  auto m = MarkedGroup::default_marking(c4);
  CHECK(code_of([&] { m.evaluate_word(Word{{"zz", 1}}); }) == ErrorCode::kUnknownSymbol);
}

TEST_CASE("re-marking binds new symbols to words") {
  auto f2 = make_group(GroupSpec::free(2));
  auto m = MarkedGroup::default_marking(f2);
  CHECK(m.is_default());
  auto t = m.remark({{"x", {{"g0", 1}}}, {"y", {{"g1", 1}}}, {"xp", {{"g0", 1}, {"g1", 1}}}});
  CHECK(t.rank() == 3);
  CHECK_FALSE(t.is_default());
  CHECK(f2->format(t.element(2)) == "ab");
  // Duplicate bound elements are a legal marking.
  auto doubled = m.remark({{"x", {{"g0", 1}}}, {"x2", {{"g0", 1}}}, {"y", {{"g1", 1}}}});
  CHECK(doubled.element(0) == doubled.element(1));
}
