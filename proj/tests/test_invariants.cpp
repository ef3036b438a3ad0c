#include <numeric>
#include <random>

#include "cyclo/error.hpp"
#include "cyclo/invariants.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cyclo;
using namespace cyclo::test;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

// ξ of the subgraph of g induced on `mask`, by union-find.
Rational xi_of_mask(const Multigraph& g, std::uint32_t mask) {
  std::vector<std::uint32_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::int64_t b0 = std::popcount(mask), b1 = 0, alpha = b0;
  for (auto [u, w] : g.edges) {
    if (!(mask >> u & 1u) || !(mask >> w & 1u)) continue;
    ++b1;
    auto a = find(u), b = find(w);
    if (a != b) {
      parent[a] = b;
      --alpha;
    }
  }
  return q(alpha - b0 + b1, b0);
}


}  // namespace

TEST_CASE("pointwise quotient examples") {
  auto c4 = Ball::build(marked(c(4)), 2);
  const Counts full4 = selection_counts(c4, all_vertices(c4));
  CHECK(xi(full4) == q(1, 4));
  CHECK(mu(full4) == q(5, 4));
  CHECK(phi(full4, 1) == q(1, 4));
  CHECK(folner_quotient(full4) == 0);

  auto f2 = Ball::build(marked(f(2)), 3);
  const Counts single = selection_counts(f2, VertexSet{0});
  CHECK(mu(single) == 1);
  CHECK(folner_quotient(single) == 2);
  CHECK(phi(single, 2) == -1);
  CHECK(xi(selection_counts(f2, all_vertices(f2))) == 0);
  CHECK_THROWS_AS(psi(single), Error);
  CHECK(psi(selection_counts(f2, VertexSet{0, 1, 2})) == 0);

  // Segments {t^0..t^(k-1)} in Free(1).
  auto z = Ball::build(marked(f(1)), 10);
  for (std::uint32_t k = 1; k <= 6; ++k) {
    VertexSet s{0};
    VertexId v = 0;
    for (std::uint32_t i = 1; i < k; ++i) {
      v = z.out(v, 0);
      s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    const Counts cnt = selection_counts(z, s);
    CHECK(mu(cnt) == 1);
    CHECK(folner_quotient(cnt) == q(1, k));
    CHECK(phi(cnt, 1) == 0);
  }

  auto m = marked(fp({c(2), c(3)}));
  auto b = Ball::build(m, 3);
  CHECK(psi(selection_counts(b, VertexSet{0, b.out(0, 0)})) == 1);
  auto c3 = Ball::build(marked(c(3)), 2);
  CHECK(psi(selection_counts(c3, all_vertices(c3))) == q(1, 2));
}

TEST_CASE("two triangles sharing a vertex") {
  auto t = tietze_free2();
  auto b = Ball::build(t, 4);
  auto id = [&](Word w) { return *b.find(t.evaluate_word(w)); };
  VertexSet s{id({}), id({{"x", 1}}), id({{"xp", 1}}),
              id({{"xp", 1}, {"x", 1}}), id({{"xp", 2}})};
  std::sort(s.begin(), s.end());
  const Counts cnt = selection_counts(b, s);
  CHECK(cnt.beta0 == 5);
  CHECK(cnt.beta1 == 6);
  CHECK(xi(cnt) == q(2, 5));
}

TEST_CASE("phi equals mu minus n on random selections") {
  std::mt19937 rng(21);
  for (auto m : {marked(f(2)), marked(fp({c(2), c(3)})), tietze_free2(),
                 marked(dp({c(3), f(1)}))}) {
    auto b = Ball::build(m, 4);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(b.size() - 1));
    for (int t = 0; t < 100; ++t) {
      VertexSet s;
      for (int k = 0; k < 10; ++k) s.push_back(pick(rng));
      const Counts cnt = selection_counts(b, normalize_selection(b, s));
      CHECK(phi(cnt, m.rank()) == mu(cnt) - Rational(m.rank()));
      CHECK(phi(cnt, m.rank()) == Rational(1 - static_cast<std::int64_t>(cnt.e_out),
                                           static_cast<std::int64_t>(cnt.beta0)));
    }
  }
}

TEST_CASE("mediant inequality for disjoint unions") {
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    Multigraph g = random_multigraph(rng, 10);
    if (g.vertex_count < 2) continue;
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << g.vertex_count) - 1);
    const std::uint32_t mask = pick(rng);
    // Components of the selection.
    std::vector<std::uint32_t> comp_masks;
    std::uint32_t left = mask;
    while (left) {
      std::uint32_t comp = left & (~left + 1);
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto [u, w] : g.edges) {
          if (!(mask >> u & 1u) || !(mask >> w & 1u)) continue;
          if ((comp >> u & 1u) != (comp >> w & 1u)) {
            comp |= (1u << u) | (1u << w);
            grew = true;
          }
        }
      }
      comp_masks.push_back(comp);
      left &= ~comp;
    }
    Rational best = xi_of_mask(g, comp_masks[0]);
    for (auto cm : comp_masks) best = std::max(best, xi_of_mask(g, cm));
    CHECK(xi_of_mask(g, mask) <= best);
  }
}

TEST_CASE("merging into a locally maximal selection never lowers xi") {
  std::mt19937 rng(13);
  int exercised = 0;
  auto run = [&](const Multigraph& g) {
    const std::uint32_t full = (1u << g.vertex_count) - 1;
    std::vector<Rational> x(full + 1);
    for (std::uint32_t m = 1; m <= full; ++m) x[m] = xi_of_mask(g, m);
    for (std::uint32_t a = 1; a <= full; ++a) {
      bool maximal = true;
      for (std::uint32_t sub = (a - 1) & a; sub && maximal; sub = (sub - 1) & a)
        if (x[sub] > x[a]) maximal = false;
      if (!maximal) continue;
      for (std::uint32_t b = 1; b <= full; ++b) {
        if (x[b] < x[a]) continue;
        ++exercised;
        CHECK(x[a | b] >= x[a]);
      }
    }
  };
  for (int t = 0; t < 30; ++t) {
    Multigraph g = random_multigraph(rng, 8);
    if (g.vertex_count >= 2) run(g);
  }
  run(Ball::build(marked(fp({c(2), c(3)})), 2).graph());
  run(Ball::build(marked(c(6)), 3).graph());
  CHECK(exercised > 1000);
}

TEST_CASE("balanced sequence") {
  auto rows = balanced_sequence(marked(f(1)), 20);
  REQUIRE(rows.size() == 20);
  CHECK(theta_estimate(rows) >= q(-1, 21));

  rows = balanced_sequence(marked(f(2)), 10);
  const Rational est = theta_estimate(rows);
  CHECK(est >= q(-101, 100));
  CHECK(est <= q(-99, 100));

  rows = balanced_sequence(marked(dp({f(1), f(1)})), 30);
  CHECK(theta_estimate(rows) >= q(-1, 10));

  for (auto m : {marked(f(2)), marked(fp({c(2), c(3)})), tietze_free2(),
                 marked(dp({f(1), f(1)})), marked(c(5))}) {
    for (const auto& row : balanced_sequence(m, 6)) {
      CHECK(row.theta_term ==
            Rational(1 - static_cast<std::int64_t>(row.counts.e_out),
                     static_cast<std::int64_t>(row.counts.beta0)));
      CHECK(row.counts.alpha == 1);
    }
  }
}

TEST_CASE("growth ratios") {
  auto r = growth_ratios(marked(f(2)), 10);
  REQUIRE(r.size() == 10);
  // β₀(B_i) = 2·3^i − 1, so the ratios approach 3 from above.
  CHECK(r.back() > 3);
  CHECK(r.back() < q(301, 100));
  r = growth_ratios(marked(f(1)), 30);
  CHECK(r.back() < q(11, 10));
  CHECK(r.back() > 1);
  r = growth_ratios(marked(fp({c(2), c(3)})), 12);
  for (std::size_t i = 4; i < r.size(); ++i) {
    CHECK(r[i] > 1);
    CHECK(r[i] < 2);
  }
}
