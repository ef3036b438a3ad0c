#include "cyclo/cayley.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<char> membership(const Ball& ball, std::span<const VertexId> s) {
  std::vector<char> in(ball.size(), 0);
  for (auto v : s) in[v] = 1;
  return in;
}

bool on_boundary(const Ball& ball, const std::vector<char>& in, VertexId v) {
  for (std::size_t j = 0; j < ball.rank(); ++j) {
    const VertexId a = ball.out(v, j);
    const VertexId b = ball.in(v, j);
    if (a == kNoVertex || !in[a] || b == kNoVertex || !in[b]) return true;
  }
  return false;
}

// BFS distances inside S from `sources`; unreachable vertices keep kNoVertex.
std::vector<std::uint32_t> distances_within(const Ball& ball,
                                            const std::vector<char>& in,
                                            std::span<const VertexId> sources) {
  std::vector<std::uint32_t> dist(ball.size(), kNoVertex);
  std::deque<VertexId> queue;
  for (auto v : sources) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < ball.rank(); ++j) {
      for (VertexId w : {ball.out(v, j), ball.in(v, j)}) {
        if (w == kNoVertex || !in[w] || dist[w] != kNoVertex) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Ball Ball::build(const MarkedGroup& marked, std::uint32_t radius,
                 std::size_t vertex_cap) {
  Ball ball(marked);
  ball.radius_ = radius;
  ball.n_ = marked.rank();
  const Group& g = *marked.group();
  const std::size_t n = ball.n_;

  std::vector<Element> steps;
  for (std::size_t j = 0; j < n; ++j) {
    steps.push_back(marked.element(j));
    steps.push_back(g.invert(marked.element(j)));
  }

  auto add = [&](Element e, std::uint32_t d) -> VertexId {
    if (ball.vertices_.size() >= vertex_cap)
      throw Error(ErrorCode::kBallTooLarge,
                  "ball of radius " + std::to_string(radius) + " exceeds " +
                      std::to_string(vertex_cap) + " vertices");
    const auto id = static_cast<VertexId>(ball.vertices_.size());
    ball.index_.emplace(e, id);
    ball.vertices_.push_back(std::move(e));
    ball.sphere_.push_back(d);
    ball.out_.resize(ball.out_.size() + n, kNoVertex);
    ball.in_.resize(ball.in_.size() + n, kNoVertex);
    return id;
  };

  add(g.identity(), 0);
  for (VertexId v = 0; v < ball.vertices_.size(); ++v) {
    const std::uint32_t d = ball.sphere_[v];
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const std::size_t j = k / 2;
      const bool forward = k % 2 == 0;
      auto& slot = forward ? ball.out_[v * n + j] : ball.in_[v * n + j];
      if (slot != kNoVertex) continue;
      Element w = g.product(ball.vertices_[v], steps[k]);
      VertexId id;
      if (auto it = ball.index_.find(w); it != ball.index_.end()) {
        id = it->second;
      } else if (d < radius) {
        id = add(std::move(w), d + 1);
      } else {
        continue;
      }
      // `add` may have reallocated; index afresh.
      (forward ? ball.out_ : ball.in_)[v * n + j] = id;
      (forward ? ball.in_ : ball.out_)[id * n + j] = v;
    }
  }

  ball.sphere_start_.assign(radius + 2, ball.vertices_.size());
  for (VertexId v = ball.vertices_.size(); v-- > 0;)
    ball.sphere_start_[ball.sphere_[v]] = v;
  for (std::uint32_t i = radius + 1; i-- > 0;)
    ball.sphere_start_[i] = std::min(ball.sphere_start_[i], ball.sphere_start_[i + 1]);
  return ball;
}

std::optional<VertexId> Ball::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ball::prefix_size(std::uint32_t i) const {
  if (i >= radius_) return vertices_.size();
  return sphere_start_[i + 1];
}

std::vector<std::uint64_t> Ball::sphere_sizes() const {
  std::vector<std::uint64_t> sizes(radius_ + 1, 0);
  for (auto d : sphere_) ++sizes[d];
  return sizes;
}

std::uint64_t Ball::edge_count() const {
  return static_cast<std::uint64_t>(
      std::count_if(out_.begin(), out_.end(),
                    [](VertexId w) { return w != kNoVertex; }));
}

Multigraph Ball::graph() const { return prefix_graph(vertices_.size()); }

Multigraph Ball::prefix_graph(std::size_t count) const {
  Multigraph g;
  g.vertex_count = static_cast<std::uint32_t>(count);
  for (VertexId v = 0; v < count; ++v)
    for (std::size_t j = 0; j < n_; ++j) {
      const VertexId w = out(v, j);
      if (w != kNoVertex && w < count) g.edges.emplace_back(v, w);
    }
  return g;
}

VertexSet normalize_selection(const Ball& ball, std::span<const VertexId> s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "selection is empty");
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() >= ball.size())
    throw Error(ErrorCode::kInvalidArgument,
                "selection vertex " + std::to_string(out.back()) +
                    " is not in the ball");
  return out;
}

Counts selection_counts(const Ball& ball, std::span<const VertexId> s) {
  const VertexSet sel = normalize_selection(ball, s);
  const auto in = membership(ball, sel);
  DisjointSets sets(ball.size());
  Counts c;
  c.beta0 = sel.size();
  std::uint64_t merges = 0;
  for (auto v : sel) {
    for (std::size_t j = 0; j < ball.rank(); ++j) {
      const VertexId w = ball.out(v, j);
      if (w != kNoVertex && in[w]) {
        ++c.beta1;
        if (sets.unite(v, w)) ++merges;
      } else {
        ++c.e_out;
      }
    }
    if (on_boundary(ball, in, v)) ++c.boundary_size;
  }
  c.alpha = c.beta0 - merges;
  c.beta2 = c.alpha + c.beta1 - c.beta0;
  return c;
}

Counts sub_ball_counts(const Ball& ball, std::uint32_t i) {
  const std::size_t count = ball.prefix_size(i);
  VertexSet sel(count);
  std::iota(sel.begin(), sel.end(), 0);
  return selection_counts(ball, sel);
}

VertexSet boundary(const Ball& ball, std::span<const VertexId> s) {
  const VertexSet sel = normalize_selection(ball, s);
  const auto in = membership(ball, sel);
  VertexSet out;
  for (auto v : sel)
    if (on_boundary(ball, in, v)) out.push_back(v);
  return out;
}

std::optional<std::uint32_t> thickness(const Ball& ball,
                                       std::span<const VertexId> s) {
  const VertexSet sel = normalize_selection(ball, s);
  const auto in = membership(ball, sel);
  VertexSet bd;
  for (auto v : sel)
    if (on_boundary(ball, in, v)) bd.push_back(v);
  if (bd.empty()) return std::nullopt;

  const auto depth = distances_within(ball, in, bd);
  std::uint32_t deepest = 0;
  for (auto v : sel)
    if (depth[v] != kNoVertex) deepest = std::max(deepest, depth[v]);

  // Components of S without boundary have infinite depth; they belong to
  // every layer but never shorten the distance to a boundary vertex.
  for (std::uint32_t r = deepest; r > 0; --r) {
    VertexSet layer;
    for (auto v : sel)
      if (depth[v] == kNoVertex || depth[v] >= r) layer.push_back(v);
    const auto dist = distances_within(ball, in, layer);
    if (std::all_of(bd.begin(), bd.end(),
                    [&](VertexId b) { return dist[b] == r; }))
      return r;
  }
  return 0;
}

std::optional<std::uint32_t> girth_through_symbol(const MarkedGroup& marked,
                                                  std::size_t j,
                                                  std::uint32_t horizon) {
  if (j >= marked.rank())
    throw Error(ErrorCode::kInvalidArgument, "symbol index out of range");
  if (horizon < 1)
    throw Error(ErrorCode::kInvalidArgument, "girth horizon must be >= 1");
  const Ball ball = Ball::build(marked, horizon);
  const VertexId start = ball.out(0, j);

  // Shortest path start → identity that avoids the directed edge (0, j).
  std::vector<std::uint32_t> dist(ball.size(), kNoVertex);
  std::deque<VertexId> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v == 0) return dist[v] + 1;
    for (std::size_t k = 0; k < ball.rank(); ++k) {
      const VertexId fwd = ball.out(v, k);
      if (fwd != kNoVertex && !(v == 0 && k == j) && dist[fwd] == kNoVertex) {
        dist[fwd] = dist[v] + 1;
        queue.push_back(fwd);
      }
      const VertexId back = ball.in(v, k);
      if (back != kNoVertex && !(back == 0 && k == j) &&
          dist[back] == kNoVertex) {
        dist[back] = dist[v] + 1;
        queue.push_back(back);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> c_value(const MarkedGroup& marked,
                                     std::uint32_t horizon) {
  std::uint32_t best = 0;
  for (std::size_t j = 0; j < marked.rank(); ++j) {
    auto g = girth_through_symbol(marked, j, horizon);
    if (!g) return std::nullopt;
    best = std::max(best, *g);
  }
  return best;
}

}  // namespace cyclo
