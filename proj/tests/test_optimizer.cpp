#include <random>

#include "cyclo/error.hpp"
#include "cyclo/optimizer.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cyclo;
using namespace cyclo::test;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

Multigraph path_tree(std::uint32_t k) {
  Multigraph g;
  g.vertex_count = k;
  for (std::uint32_t v = 1; v < k; ++v) g.edges.emplace_back((v - 1) / 2, v);
  return g;
}

void check_result(const Multigraph& g, int c, const RatioResult& r) {
  REQUIRE_FALSE(r.witness.empty());
  CHECK(r.value == Rational(static_cast<std::int64_t>(induced_edges(g, r.witness)) + c,
                            static_cast<std::int64_t>(r.witness.size())));
  const Rational conn(
      static_cast<std::int64_t>(induced_edges(g, r.connected_witness)) + c,
      static_cast<std::int64_t>(r.connected_witness.size()));
  if (c == 1) CHECK(conn >= r.value);
}

}  // namespace

TEST_CASE("max_weight_subset examples") {
  auto w = max_weight_subset(cycle_graph(4), q(1, 2));
  CHECK(w.value == 2);
  CHECK(w.set == VertexSet{0, 1, 2, 3});

  w = max_weight_subset(path_tree(7), q(2));
  CHECK(w.value == 0);
  CHECK(w.set.empty());

  w = max_weight_subset(cycle_graph(4), q(3, 2), VertexId{2});
  CHECK(w.value == q(-3, 2));
  CHECK(w.set == VertexSet{2});
}

TEST_CASE("max_ratio and brute force examples") {
  CHECK(max_ratio(complete_graph(4), 0).value == q(3, 2));
  CHECK(brute_force_ratio(complete_graph(4), 0).value == q(3, 2));
  CHECK(brute_force_ratio(cycle_graph(4), 1).value == q(5, 4));
  Multigraph two;
  two.vertex_count = 4;
  two.edges = {{0, 1}, {2, 3}};
  CHECK(brute_force_ratio(two, 1).value == 1);
  CHECK(max_ratio(two, 1).value == 1);
  CHECK_THROWS_AS(brute_force_ratio(cycle_graph(13), 0), Error);
  CHECK(brute_force_ratio(cycle_graph(13), 0, 13).value == 1);

  auto b = Ball::build(marked(f(2)), 3);
  CHECK(max_ratio(b.graph(), 1).value == 1);
}

TEST_CASE("greedy examples") {
  CHECK(greedy_peel(complete_graph(4), 0).value == q(3, 2));
  CHECK(greedy_peel(cycle_graph(4), 0).value == 1);
  CHECK(greedy_peel(path_tree(9), 1).value == 1);
  CHECK(greedy_peel(path_tree(9), 1).method == Method::kGreedy);
}

TEST_CASE("exact optimum equals brute force on random instances") {
  std::mt19937 rng(2024);
  int instances = 0;
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_multigraph(rng, 12);
    for (int c : {0, 1}) {
      const RatioResult exact = max_ratio(g, c);
      const RatioResult brute = brute_force_ratio(g, c);
      CHECK(exact.value == brute.value);
      CHECK(greedy_peel(g, c).value <= exact.value);
      CHECK(exact.iterations <= static_cast<std::uint64_t>(g.vertex_count) * g.vertex_count);
      check_result(g, c, exact);
      ++instances;
    }
  }
  CHECK(instances == 200);
}

TEST_CASE("exact optimum equals brute force on small Cayley balls") {
  for (auto m : {marked(c(5)), marked(c(8)), marked(fp({c(2), c(3)})),
                 marked(dp({c(2), c(2)})), marked(s3_table()), tietze_free2(),
                 marked(fp({c(2), c(4)}))}) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      auto b = Ball::build(m, r);
      if (b.size() > 12) break;
      for (int c : {0, 1}) {
        const Multigraph g = b.graph();
        CHECK(max_ratio(g, c).value == brute_force_ratio(g, c).value);
      }
    }
  }
}

TEST_CASE("forced vertex sweep matches per-vertex forced cuts") {
  std::mt19937 rng(77);
  for (int t = 0; t < 60; ++t) {
    Multigraph g = random_multigraph(rng, 12);
    const RatioResult r = max_ratio(g, 1);
    // At the optimum no forced cut finds a set with ratio above it.
    for (VertexId v = 0; v < g.vertex_count; ++v) {
      const auto w = max_weight_subset(g, r.value, v);
      CHECK(w.value <= -1);
    }
  }
}

TEST_CASE("xi sup in ball") {
  for (std::uint64_t k = 2; k <= 8; ++k) {
    const auto s = xi_sup_in_ball(marked(c(k)), static_cast<std::uint32_t>((k + 1) / 2));
    CHECK(s.xi == q(1, static_cast<std::int64_t>(k)));
    auto b = Ball::build(marked(c(k)), static_cast<std::uint32_t>(k));
    CHECK(brute_force_ratio(b.graph(), 1).value - 1 == s.xi);
  }
  for (std::uint32_t r = 1; r <= 4; ++r) CHECK(xi_sup_in_ball(marked(f(2)), r).xi == 0);
}

TEST_CASE("lower bound sequences") {
  for (const auto& row : xi_hat_lower_bounds(marked(f(2)), 5))
    CHECK(row.xi_hat_lower == -1);
  const auto c6 = xi_hat_lower_bounds(marked(c(6)), 5);
  for (std::size_t i = 2; i < c6.size(); ++i) CHECK(c6[i].xi_hat_lower == q(1, 6));

  const auto rows = xi_hat_lower_bounds(marked(fp({c(2), c(3)})), 6);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].xi_hat_lower >= rows[i - 1].xi_hat_lower);
  // Frozen from the first verified run of the exact solver.
  CHECK(rows.back().sup.ratio.value == q(73, 42));
}
