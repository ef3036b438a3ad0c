#include "cyclo/optimizer.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

using Cap = std::int64_t;

constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;
// Total finite capacity allowed in one network; keeps every residual sum far
// from overflow.
constexpr Cap kCapacityBudget = Cap{1} << 60;

// Dinic max-flow on a forward-star graph. Arc a and a^1 are mutual reverses.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  std::int64_t add_arc(std::size_t u, std::size_t v, Cap cap) {
    const auto a = static_cast<std::int64_t>(to_.size());
    push(u, v, cap);
    push(v, u, 0);
    return a;
  }

  Cap residual(std::int64_t a) const { return cap_[static_cast<std::size_t>(a)]; }
  Cap flow(std::int64_t a) const { return cap_[static_cast<std::size_t>(a ^ 1)]; }

  Cap max_flow(std::size_t s, std::size_t t) {
    Cap total = 0;
    while (levels(s, t)) {
      current_ = head_;
      total += blocking_flow(s, t);
    }
    return total;
  }

  /// Nodes reachable from s in the residual graph.
  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto a = head_[u]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
        const auto ua = static_cast<std::size_t>(a);
        if (cap_[ua] > 0 && !seen[to_[ua]]) {
          seen[to_[ua]] = 1;
          queue.push_back(to_[ua]);
        }
      }
    }
    return seen;
  }

 private:
  void push(std::size_t u, std::size_t v, Cap cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<std::int64_t>(to_.size() - 1);
  }

  bool levels(std::size_t s, std::size_t t) {
    level_.assign(head_.size(), -1);
    std::deque<std::size_t> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto a = head_[u]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
        const auto ua = static_cast<std::size_t>(a);
        if (cap_[ua] > 0 && level_[to_[ua]] < 0) {
          level_[to_[ua]] = level_[u] + 1;
          queue.push_back(to_[ua]);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Iterative DFS over the level graph; the level graph can be as deep as
  // the network is large, so recursion is avoided.
  Cap blocking_flow(std::size_t s, std::size_t t) {
    Cap total = 0;
    std::vector<std::int64_t> path;
    std::size_t u = s;
    while (true) {
      if (u == t) {
        Cap f = kInfinite;
        for (auto a : path) f = std::min(f, cap_[static_cast<std::size_t>(a)]);
        std::size_t cut = path.size();
        for (std::size_t k = 0; k < path.size(); ++k) {
          const auto a = static_cast<std::size_t>(path[k]);
          cap_[a] -= f;
          cap_[a ^ 1] += f;
          if (cap_[a] == 0 && cut == path.size()) cut = k;
        }
        total += f;
        path.resize(cut);
        u = path.empty() ? s : to_[static_cast<std::size_t>(path.back())];
        continue;
      }
      auto& a = current_[u];
      while (a != -1) {
        const auto ua = static_cast<std::size_t>(a);
        if (cap_[ua] > 0 && level_[to_[ua]] == level_[u] + 1) break;
        a = next_[ua];
      }
      if (a != -1) {
        path.push_back(a);
        u = to_[static_cast<std::size_t>(a)];
        continue;
      }
      if (u == s) break;
      level_[u] = -1;
      const auto back = static_cast<std::size_t>(path.back());
      path.pop_back();
      u = to_[back ^ 1];
      current_[u] = next_[static_cast<std::size_t>(current_[u])];
    }
    return total;
  }

  std::vector<std::size_t> to_;
  std::vector<Cap> cap_;
  std::vector<std::int64_t> next_;
  std::vector<std::int64_t> head_;
  std::vector<std::int64_t> current_;
  std::vector<int> level_;
};

Cap to_cap(const Integer& v) {
  if (v < 0 || v > Integer(kCapacityBudget))
    throw Error(ErrorCode::kCapacityOverflow, "capacity exceeds integer budget");
  return v.convert_to<Cap>();
}

// Edge-node/vertex-node network for max β₁(S) − (p/q)·β₀(S):
// s → edge (q), edge → endpoints (∞), vertex → t (p).
struct CutProblem {
  CutProblem(const Multigraph& g, const Rational& lambda,
             std::optional<VertexId> forced)
      : graph(g),
        net(2 + static_cast<std::size_t>(g.vertex_count) + g.edges.size()) {
    if (lambda < 0)
      throw Error(ErrorCode::kInvalidArgument, "lambda must be non-negative");
    p = to_cap(numerator_of(lambda));
    q = to_cap(denominator_of(lambda));
    const Integer total = Integer(q) * Integer(g.edges.size()) +
                          Integer(p) * Integer(g.vertex_count);
    to_cap(total);
    const std::size_t base = 2 + g.vertex_count;
    endpoint_arcs.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      net.add_arc(0, base + e, q);
      const auto a0 = net.add_arc(base + e, 2 + g.edges[e].first, kInfinite);
      const auto a1 = net.add_arc(base + e, 2 + g.edges[e].second, kInfinite);
      endpoint_arcs.emplace_back(a0, a1);
    }
    for (VertexId v = 0; v < g.vertex_count; ++v) net.add_arc(2 + v, 1, p);
    if (forced) net.add_arc(0, 2 + *forced, kInfinite);
    flow = net.max_flow(0, 1);
    const auto side = net.reachable(0);
    for (VertexId v = 0; v < g.vertex_count; ++v)
      if (side[2 + v]) source_side.push_back(v);
  }

  const Multigraph& graph;
  FlowNetwork net;
  Cap p = 0;
  Cap q = 1;
  Cap flow = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> endpoint_arcs;
  VertexSet source_side;
};

// q·β₁(S) − p·β₀(S).
Integer scaled_weight(const Multigraph& g, const VertexSet& s, Cap p, Cap q) {
  return Integer(q) * Integer(induced_edges(g, s)) -
         Integer(p) * Integer(s.size());
}

Rational set_ratio(const Multigraph& g, const VertexSet& s, int c) {
  return Rational(Integer(induced_edges(g, s)) + c, Integer(s.size()));
}

// Called when the unforced cut is empty, i.e. every non-empty S has
// q·β₁ − p·β₀ ≤ 0 and the flow saturates every source arc. Finds the
// maximum of q·β₁ − p·β₀ over non-empty S whenever that maximum exceeds
// −q, by splitting on the smallest vertex of S: subproblem k forces v_k in
// and v_0..v_{k−1} out. Each subproblem only adds flow leaving v_k, and the
// flow stays feasible when v_k is then excluded, so the pass is one sweep.
std::optional<VertexSet> forced_pass(const CutProblem& cut) {
  const Multigraph& g = cut.graph;
  const std::size_t nv = g.vertex_count;
  const Cap p = cut.p;
  const Cap q = cut.q;

  std::vector<std::array<Cap, 2>> x(g.edges.size());
  std::vector<Cap> to_sink(nv, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    x[e][0] = cut.net.flow(cut.endpoint_arcs[e].first);
    x[e][1] = cut.net.flow(cut.endpoint_arcs[e].second);
    to_sink[g.edges[e].first] += x[e][0];
    to_sink[g.edges[e].second] += x[e][1];
  }

  // Incidences per vertex: 2*e + side.
  std::vector<std::size_t> start(nv + 1, 0);
  for (const auto& [u, w] : g.edges) {
    ++start[u + 1];
    ++start[w + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::size_t> inc(2 * g.edges.size());
  {
    auto fill = start;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      inc[fill[g.edges[e].first]++] = 2 * e;
      inc[fill[g.edges[e].second]++] = 2 * e + 1;
    }
  }
  auto other_end = [&](std::size_t i) {
    const auto& [u, w] = g.edges[i / 2];
    return (i % 2 == 0) ? w : u;
  };

  std::vector<char> excluded(nv, 0);
  std::vector<std::uint64_t> stamp(nv, 0);
  std::vector<std::size_t> via(nv, 0);
  std::uint64_t round = 0;
  std::optional<VertexSet> best;
  Cap best_extra = q;

  for (VertexId v = 0; v < nv; ++v) {
    Cap extra = 0;
    while (extra < q) {
      if (to_sink[v] < p) {
        const Cap d = std::min(q - extra, p - to_sink[v]);
        to_sink[v] += d;
        extra += d;
        continue;
      }
      ++round;
      std::deque<VertexId> queue{v};
      std::vector<VertexId> visited{v};
      stamp[v] = round;
      std::optional<VertexId> found;
      while (!queue.empty() && !found) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (std::size_t k = start[u]; k < start[u + 1]; ++k) {
          const std::size_t i = inc[k];
          if (x[i / 2][i % 2] <= 0) continue;
          const VertexId w = other_end(i);
          if (stamp[w] == round) continue;
          stamp[w] = round;
          via[w] = i;
          visited.push_back(w);
          if (excluded[w] || to_sink[w] < p) {
            found = w;
            break;
          }
          queue.push_back(w);
        }
      }
      if (!found) {
        if (extra < best_extra) {
          best_extra = extra;
          std::sort(visited.begin(), visited.end());
          best = std::move(visited);
        }
        break;
      }
      Cap d = q - extra;
      if (!excluded[*found]) d = std::min(d, p - to_sink[*found]);
      for (VertexId w = *found; w != v;) {
        const std::size_t i = via[w];
        d = std::min(d, x[i / 2][i % 2]);
        w = other_end(i ^ 1);
      }
      for (VertexId w = *found; w != v;) {
        const std::size_t i = via[w];
        x[i / 2][i % 2] -= d;
        x[i / 2][(i % 2) ^ 1] += d;
        w = other_end(i ^ 1);
      }
      if (!excluded[*found]) to_sink[*found] += d;
      extra += d;
    }
    excluded[v] = 1;
  }
  return best;
}

VertexSet best_component(const Multigraph& g, const VertexSet& s, int c) {
  std::vector<char> in(g.vertex_count, 0);
  for (auto v : s) in[v] = 1;
  std::vector<VertexId> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, w] : g.edges)
    if (in[u] && in[w]) {
      const VertexId a = find(u), b = find(w);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<VertexSet> comps;
  std::vector<std::size_t> slot(g.vertex_count, SIZE_MAX);
  for (auto v : s) {
    const VertexId r = find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  std::size_t pick = 0;
  Rational best = set_ratio(g, comps[0], c);
  for (std::size_t k = 1; k < comps.size(); ++k) {
    Rational r = set_ratio(g, comps[k], c);
    if (r > best) {
      best = r;
      pick = k;
    }
  }
  return comps[pick];
}

void require_vertices(const Multigraph& g) {
  if (g.vertex_count == 0)
    throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  for (const auto& [u, w] : g.edges)
    if (u >= g.vertex_count || w >= g.vertex_count)
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
}

void require_offset(int c) {
  if (c != 0 && c != 1)
    throw Error(ErrorCode::kInvalidArgument, "ratio offset must be 0 or 1");
}

RatioResult finish(const Multigraph& g, int c, VertexSet witness,
                   std::uint64_t iterations, Method method) {
  RatioResult r;
  r.value = set_ratio(g, witness, c);
  r.connected_witness = best_component(g, witness, c);
  r.witness = std::move(witness);
  r.iterations = iterations;
  r.method = method;
  return r;
}

}  // namespace

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::kExactFlow: return "exact-flow";
    case Method::kGreedy: return "greedy";
    case Method::kBrute: return "brute";
  }
  return "unknown";
}

std::uint64_t induced_edges(const Multigraph& g, std::span<const VertexId> s) {
  std::vector<char> in(g.vertex_count, 0);
  for (auto v : s) in[v] = 1;
  std::uint64_t count = 0;
  for (const auto& [u, w] : g.edges)
    if (in[u] && in[w]) ++count;
  return count;
}

WeightedSubset max_weight_subset(const Multigraph& g, const Rational& lambda,
                                 std::optional<VertexId> forced) {
  require_vertices(g);
  if (forced && *forced >= g.vertex_count)
    throw Error(ErrorCode::kInvalidArgument, "forced vertex out of range");
  CutProblem cut(g, lambda, forced);
  WeightedSubset out;
  out.set = cut.source_side;
  out.value = Rational(scaled_weight(g, out.set, cut.p, cut.q), Integer(cut.q));
  return out;
}

RatioResult max_ratio(const Multigraph& g, int c,
                      const std::optional<WarmStart>& warm) {
  require_vertices(g);
  require_offset(c);
  VertexSet best(g.vertex_count);
  std::iota(best.begin(), best.end(), 0);
  Rational lambda = set_ratio(g, best, c);
  if (warm && !warm->witness.empty()) {
    VertexSet w = warm->witness;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.back() >= g.vertex_count)
      throw Error(ErrorCode::kInvalidArgument, "warm start vertex out of range");
    Rational r = set_ratio(g, w, c);
    if (r > lambda) {
      lambda = r;
      best = std::move(w);
    }
  }

  const std::uint64_t cap =
      static_cast<std::uint64_t>(g.vertex_count) * g.vertex_count + 1;
  std::uint64_t iterations = 0;
  while (true) {
    if (++iterations > cap)
      throw Error(ErrorCode::kInvalidArgument, "ratio iteration did not converge");
    CutProblem cut(g, lambda, std::nullopt);
    std::optional<VertexSet> next;
    if (!cut.source_side.empty()) {
      next = cut.source_side;
    } else if (c == 1) {
      next = forced_pass(cut);
    }
    if (!next) break;
    Rational r = set_ratio(g, *next, c);
    if (r <= lambda)
      throw Error(ErrorCode::kInvalidArgument, "ratio iterate failed to increase");
    lambda = r;
    best = std::move(*next);
  }
  return finish(g, c, std::move(best), iterations, Method::kExactFlow);
}

RatioResult brute_force_ratio(const Multigraph& g, int c, std::size_t limit) {
  require_vertices(g);
  require_offset(c);
  if (g.vertex_count > limit || g.vertex_count > 30)
    throw Error(ErrorCode::kTooLarge,
                "brute force limited to " + std::to_string(limit) + " vertices");
  const std::uint32_t full = (1u << g.vertex_count) - 1;
  std::optional<Rational> best;
  std::uint32_t best_mask = full;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint64_t edges = 0;
    for (const auto& [u, w] : g.edges)
      if ((mask >> u & 1u) && (mask >> w & 1u)) ++edges;
    Rational r(Integer(edges) + c, Integer(std::popcount(mask)));
    if (!best || r > *best) {
      best = r;
      best_mask = mask;
    }
  }
  VertexSet witness;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (best_mask >> v & 1u) witness.push_back(v);
  return finish(g, c, std::move(witness), full, Method::kBrute);
}

RatioResult greedy_peel(const Multigraph& g, int c) {
  require_vertices(g);
  require_offset(c);
  const std::size_t nv = g.vertex_count;
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first)
      incident[g.edges[e].second].push_back(e);
  }
  std::vector<std::uint64_t> degree(nv, 0);
  for (VertexId v = 0; v < nv; ++v) degree[v] = incident[v].size();
  std::set<std::pair<std::uint64_t, VertexId>> order;
  for (VertexId v = 0; v < nv; ++v) order.emplace(degree[v], v);

  std::vector<char> removed(nv, 0);
  std::vector<char> edge_gone(g.edges.size(), 0);
  std::uint64_t edges = g.edges.size();
  std::uint64_t alive = nv;
  Rational best(Integer(edges) + c, Integer(alive));
  std::size_t best_step = 0;
  std::vector<VertexId> peeled;
  while (alive > 1) {
    const VertexId v = order.begin()->second;
    order.erase(order.begin());
    removed[v] = 1;
    peeled.push_back(v);
    --alive;
    for (auto e : incident[v]) {
      if (edge_gone[e]) continue;
      edge_gone[e] = 1;
      --edges;
      const auto [a, b] = g.edges[e];
      const VertexId w = a == v ? b : a;
      if (w == v || removed[w]) continue;
      order.erase({degree[w], w});
      order.emplace(--degree[w], w);
    }
    Rational r(Integer(edges) + c, Integer(alive));
    if (r > best) {
      best = r;
      best_step = peeled.size();
    }
  }
  std::vector<char> drop(nv, 0);
  for (std::size_t k = 0; k < best_step; ++k) drop[peeled[k]] = 1;
  VertexSet witness;
  for (VertexId v = 0; v < nv; ++v)
    if (!drop[v]) witness.push_back(v);
  return finish(g, c, std::move(witness), peeled.size(), Method::kGreedy);
}

XiSup xi_sup_in_ball(const MarkedGroup& marked, std::uint32_t r,
                     std::size_t vertex_cap) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 1");
  const Ball ball = Ball::build(marked, r, vertex_cap);
  XiSup out;
  out.radius = r;
  out.ball_size = ball.size();
  out.ratio = max_ratio(ball.graph(), 1);
  out.xi = out.ratio.value - 1;
  return out;
}

std::vector<BoundRow> xi_hat_lower_bounds(const MarkedGroup& marked,
                                          std::uint32_t rmax,
                                          std::size_t vertex_cap) {
  if (rmax < 1) throw Error(ErrorCode::kInvalidArgument, "rmax must be >= 1");
  const Ball ball = Ball::build(marked, rmax, vertex_cap);
  const Rational one_minus_n = Rational(1) - Rational(marked.rank());
  std::vector<BoundRow> rows;
  std::optional<WarmStart> warm;
  for (std::uint32_t r = 1; r <= rmax; ++r) {
    const std::size_t count = ball.prefix_size(r);
    BoundRow row;
    row.sup.radius = r;
    row.sup.ball_size = count;
    row.sup.ratio = max_ratio(ball.prefix_graph(count), 1, warm);
    row.sup.xi = row.sup.ratio.value - 1;
    row.xi_hat_lower = one_minus_n + row.sup.xi;
    warm = WarmStart{row.sup.ratio.witness};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyclo
