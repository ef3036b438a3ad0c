#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/cayley.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

/// β₂/β₀.
Rational xi(const Counts& c);
/// (β₁+1)/β₀.
Rational mu(const Counts& c);
/// β₂/(β₀−1); throws kTrivialSubgraph when β₀ = 1.
Rational psi(const Counts& c);
/// e_out/β₀.
Rational folner_quotient(const Counts& c);
/// (1 + β₁ − n·β₀)/β₀, which equals μ − n.
Rational phi(const Counts& c, std::size_t n);

struct BalancedRow {
  std::uint32_t i = 0;
  Counts counts;
  Rational xi_ball;
  Rational theta_term;  // 1 − n + ξ(B_i)
};

/// Rows for B_1..B_rmax, all taken from one ball of radius rmax.
std::vector<BalancedRow> balanced_sequence(const MarkedGroup& marked,
                                           std::uint32_t rmax,
                                           std::size_t vertex_cap = kDefaultVertexCap);

/// Largest theta_term over the last ⌈rows/2⌉ rows.
Rational theta_estimate(const std::vector<BalancedRow>& rows);

/// β₀(B_{i+1})/β₀(B_i) for i = 0..rmax−1.
std::vector<Rational> growth_ratios(const MarkedGroup& marked, std::uint32_t rmax,
                                    std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace cyclo
