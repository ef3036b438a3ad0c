#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
constexpr std::size_t kDefaultVertexCap = 2'000'000;

struct Counts {
  std::uint64_t beta0 = 0;
  std::uint64_t beta1 = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta2 = 0;
  std::uint64_t e_out = 0;
  std::uint64_t boundary_size = 0;

  bool operator==(const Counts&) const = default;
};

/// Undirected multigraph. Each directed labeled Cayley edge becomes one
/// entry of `edges`, so parallel edges are kept.
struct Multigraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

/// Induced ball of radius r around the identity. Vertices are numbered in
/// BFS discovery order, so every sphere is a contiguous index range.
class Ball {
 public:
  static Ball build(const MarkedGroup& marked, std::uint32_t radius,
                    std::size_t vertex_cap = kDefaultVertexCap);

  const MarkedGroup& marked() const noexcept { return marked_; }
  std::uint32_t radius() const noexcept { return radius_; }
  std::size_t rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  const Element& vertex(VertexId v) const { return vertices_.at(v); }
  std::uint32_t sphere(VertexId v) const { return sphere_.at(v); }
  /// Index of v·x_j, or kNoVertex when it lies outside the ball.
  VertexId out(VertexId v, std::size_t j) const { return out_[v * n_ + j]; }
  /// Index of v·x_j⁻¹, or kNoVertex when it lies outside the ball.
  VertexId in(VertexId v, std::size_t j) const { return in_[v * n_ + j]; }
  std::optional<VertexId> find(const Element& e) const;

  /// Number of vertices at distance ≤ i; these are the first indices.
  std::size_t prefix_size(std::uint32_t i) const;
  std::vector<std::uint64_t> sphere_sizes() const;
  std::uint64_t edge_count() const;

  Multigraph graph() const;
  /// Graph induced on the first `count` vertices.
  Multigraph prefix_graph(std::size_t count) const;

 private:
  explicit Ball(const MarkedGroup& marked) : marked_(marked) {}

  MarkedGroup marked_;
  std::uint32_t radius_ = 0;
  std::size_t n_ = 0;
  std::vector<Element> vertices_;
  std::vector<std::uint32_t> sphere_;
  std::vector<VertexId> out_;
  std::vector<VertexId> in_;
  std::vector<std::size_t> sphere_start_;
  std::unordered_map<Element, VertexId, ElementHash> index_;
};

/// Sorts and deduplicates; throws kEmptySelection or kInvalidArgument.
VertexSet normalize_selection(const Ball& ball, std::span<const VertexId> s);

/// Exact statistics of the subgraph induced on S. Edges leaving the ball are
/// known from the ball's adjacency, so no extra group products are needed.
Counts selection_counts(const Ball& ball, std::span<const VertexId> s);

/// Counts of the concentric sub-ball B_i (i ≤ ball radius).
Counts sub_ball_counts(const Ball& ball, std::uint32_t i);

/// Vertices of S with a Cayley neighbour (either direction) outside S.
VertexSet boundary(const Ball& ball, std::span<const VertexId> s);

/// Thickness of the subgraph induced on S, witnessed by the deepest layer
/// L_r = {v : d_S(v, ∂S) ≥ r}. nullopt means infinite (empty boundary).
std::optional<std::uint32_t> thickness(const Ball& ball,
                                       std::span<const VertexId> s);

/// Length of a shortest reduced circuit through the edge 1 → x_j inside
/// B_horizon; nullopt when there is none (beyond the horizon).
std::optional<std::uint32_t> girth_through_symbol(const MarkedGroup& marked,
                                                  std::size_t j,
                                                  std::uint32_t horizon);

/// Maximum girth over all symbols; nullopt if any symbol has none.
std::optional<std::uint32_t> c_value(const MarkedGroup& marked,
                                     std::uint32_t horizon);

}  // namespace cyclo
