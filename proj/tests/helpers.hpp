#pragma once

#include <array>
#include <random>
#include <string>

#include "cyclo/cayley.hpp"
#include "cyclo/group.hpp"

namespace cyclo::test {

inline MarkedGroup marked(const GroupSpec& spec) {
  return MarkedGroup::default_marking(make_group(spec));
}

inline GroupSpec c(std::uint64_t k) { return GroupSpec::cyclic(k); }
inline GroupSpec f(std::uint32_t m) { return GroupSpec::free(m); }
inline GroupSpec fp(std::vector<GroupSpec> s) {
  return GroupSpec::free_product(std::move(s));
}
inline GroupSpec dp(std::vector<GroupSpec> s) {
  return GroupSpec::direct_product(std::move(s));
}

/// Symmetric group on three letters as a Cayley table, generated by a
/// transposition and a 3-cycle.
inline GroupSpec s3_table() {
  // Permutations of {0,1,2} in a fixed order; compose as (a*b)(i) = a(b(i)).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  FiniteTableSpec t;
  t.names = {"e", "s01", "s12", "s02", "r", "r2"};
  t.table.assign(6, std::vector<std::uint32_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == comp) t.table[a][b] = static_cast<std::uint32_t>(k);
    }
  t.generators = {1, 4};
  return GroupSpec::finite_table(std::move(t));
}

/// Free group of rank 2 re-marked with x, y and x' = xy.
inline MarkedGroup tietze_free2() {
  auto base = marked(f(2));
  return base.remark({{"x", {{"g0", 1}}}, {"y", {{"g1", 1}}},
                      {"xp", {{"g0", 1}, {"g1", 1}}}});
}

inline Multigraph random_multigraph(std::mt19937& rng, std::uint32_t max_vertices) {
  std::uniform_int_distribution<std::uint32_t> nv(1, max_vertices);
  Multigraph g;
  g.vertex_count = nv(rng);
  if (g.vertex_count < 2) return g;
  std::uniform_int_distribution<std::uint32_t> pick(0, g.vertex_count - 1);
  std::uniform_int_distribution<std::uint32_t> ne(0, 3 * g.vertex_count);
  const std::uint32_t edges = ne(rng);
  for (std::uint32_t e = 0; e < edges; ++e) {
    const auto u = pick(rng);
    auto w = pick(rng);
    if (w == u) w = (u + 1) % g.vertex_count;
    g.edges.emplace_back(u, w);
  }
  return g;
}

inline Multigraph cycle_graph(std::uint32_t k) {
  Multigraph g;
  g.vertex_count = k;
  for (std::uint32_t v = 0; v < k; ++v) g.edges.emplace_back(v, (v + 1) % k);
  return g;
}

inline Multigraph complete_graph(std::uint32_t k) {
  Multigraph g;
  g.vertex_count = k;
  for (std::uint32_t u = 0; u < k; ++u)
    for (std::uint32_t v = u + 1; v < k; ++v) g.edges.emplace_back(u, v);
  return g;
}

inline VertexSet all_vertices(const Ball& b) {
  VertexSet s(b.size());
  for (VertexId v = 0; v < b.size(); ++v) s[v] = v;
  return s;
}

}  // namespace cyclo::test
