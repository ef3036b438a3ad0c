#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclo/cayley.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

enum class Method { kExactFlow, kGreedy, kBrute };

const char* method_name(Method m) noexcept;

/// Number of edges of `g` with both endpoints in `s` (s sorted, unique).
std::uint64_t induced_edges(const Multigraph& g, std::span<const VertexId> s);

struct WeightedSubset {
  Rational value;  // β₁(S) − λ·β₀(S)
  VertexSet set;
};

/// Maximizes β₁(S) − λ·β₀(S) by a minimum cut; returns the smallest
/// maximizer. With `forced` the maximum is over sets containing it.
WeightedSubset max_weight_subset(const Multigraph& g, const Rational& lambda,
                                 std::optional<VertexId> forced = std::nullopt);

struct RatioResult {
  Rational value;  // (β₁(witness) + c)/β₀(witness)
  VertexSet witness;
  VertexSet connected_witness;
  std::uint64_t iterations = 0;
  Method method = Method::kExactFlow;
};

/// Optional starting point: any non-empty set, used if it beats the
/// whole graph.
struct WarmStart {
  VertexSet witness;
};

/// Exact maximum of (β₁(S)+c)/β₀(S) over non-empty S, c ∈ {0, 1}.
RatioResult max_ratio(const Multigraph& g, int c,
                      const std::optional<WarmStart>& warm = std::nullopt);

constexpr std::size_t kDefaultBruteLimit = 12;

/// Exhaustive maximum; throws kTooLarge above `limit` vertices.
RatioResult brute_force_ratio(const Multigraph& g, int c,
                              std::size_t limit = kDefaultBruteLimit);

/// Min-degree peeling; the value never exceeds the exact optimum.
RatioResult greedy_peel(const Multigraph& g, int c);

struct XiSup {
  std::uint32_t radius = 0;
  std::uint64_t ball_size = 0;
  Rational xi;  // sup ξ over subgraphs of B_r
  RatioResult ratio;
};

XiSup xi_sup_in_ball(const MarkedGroup& marked, std::uint32_t r,
                     std::size_t vertex_cap = kDefaultVertexCap);

struct BoundRow {
  XiSup sup;
  Rational xi_hat_lower;  // 1 − n + sup ξ
};

/// Rows r = 1..rmax, computed on one ball with each radius warm-started from
/// the previous witness.
std::vector<BoundRow> xi_hat_lower_bounds(const MarkedGroup& marked,
                                          std::uint32_t rmax,
                                          std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace cyclo
