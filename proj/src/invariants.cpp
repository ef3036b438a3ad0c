#include "cyclo/invariants.hpp"

#include <algorithm>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(Integer(num), Integer(den));
}

void require_vertices(const Counts& c) {
  if (c.beta0 == 0)
    throw Error(ErrorCode::kInvalidArgument, "counts have no vertices");
}

}  // namespace

Rational xi(const Counts& c) {
  require_vertices(c);
  return ratio(c.beta2, c.beta0);
}

Rational mu(const Counts& c) {
  require_vertices(c);
  return ratio(c.beta1 + 1, c.beta0);
}

Rational psi(const Counts& c) {
  require_vertices(c);
  if (c.beta0 == 1)
    throw Error(ErrorCode::kTrivialSubgraph, "psi is undefined on a single vertex");
  return ratio(c.beta2, c.beta0 - 1);
}

Rational folner_quotient(const Counts& c) {
  require_vertices(c);
  return ratio(c.e_out, c.beta0);
}

Rational phi(const Counts& c, std::size_t n) {
  require_vertices(c);
  return Rational(Integer(1) + Integer(c.beta1) - Integer(n) * Integer(c.beta0),
                  Integer(c.beta0));
}

std::vector<BalancedRow> balanced_sequence(const MarkedGroup& marked,
                                           std::uint32_t rmax,
                                           std::size_t vertex_cap) {
  if (rmax < 1)
    throw Error(ErrorCode::kInvalidArgument, "balanced sequence needs rmax >= 1");
  const Ball ball = Ball::build(marked, rmax, vertex_cap);
  const Rational one_minus_n = Rational(1) - Rational(marked.rank());
  std::vector<BalancedRow> rows;
  for (std::uint32_t i = 1; i <= rmax; ++i) {
    BalancedRow row;
    row.i = i;
    row.counts = sub_ball_counts(ball, i);
    row.xi_ball = xi(row.counts);
    row.theta_term = one_minus_n + row.xi_ball;
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational theta_estimate(const std::vector<BalancedRow>& rows) {
  if (rows.empty())
    throw Error(ErrorCode::kInvalidArgument, "no balanced rows");
  const std::size_t tail = (rows.size() + 1) / 2;
  Rational best = rows.back().theta_term;
  for (std::size_t k = rows.size() - tail; k < rows.size(); ++k)
    best = std::max(best, rows[k].theta_term);
  return best;
}

std::vector<Rational> growth_ratios(const MarkedGroup& marked, std::uint32_t rmax,
                                    std::size_t vertex_cap) {
  const Ball ball = Ball::build(marked, rmax, vertex_cap);
  std::vector<Rational> out;
  for (std::uint32_t i = 0; i < rmax; ++i)
    out.push_back(ratio(ball.prefix_size(i + 1), ball.prefix_size(i)));
  return out;
}

}  // namespace cyclo
