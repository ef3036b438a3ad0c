#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/group.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

enum class Amenability { kYes, kNo, kUnknown };

const char* amenability_name(Amenability a) noexcept;

struct Facts {
  Cardinality order = Cardinality::finite(1);
  Amenability amenable = Amenability::kUnknown;
  std::optional<std::uint32_t> free_rank;
  std::size_t generators = 0;  // size of the default marking
  bool minimal = false;        // no proper subset of the marking generates
};

Facts facts_of(const GroupSpec& spec);

enum class Quantity { kXiHat, kPsiHat };

const char* quantity_name(Quantity q) noexcept;

struct Prediction {
  Quantity quantity = Quantity::kXiHat;
  Rational value;         // normalized: 1 − n + unnormalized
  Rational unnormalized;  // Ξ or Ψ
  std::string rule;       // which closed form produced the value
  std::vector<std::string> assumptions;
};

/// Closed-form Ξ̂ for the default marking of a structured spec. Throws
/// kUnsupported outside the covered families or for other markings.
Prediction predict_xi_hat(const MarkedGroup& marked);
Prediction predict_xi_hat(const GroupSpec& spec);

/// Closed-form Ψ̂; additionally requires the default marking to be minimal.
Prediction predict_psi_hat(const MarkedGroup& marked);
Prediction predict_psi_hat(const GroupSpec& spec);

/// Ξ̂ of G₁ × G₂ from the factors' Ξ̂ values and orders (1/∞ = 0).
Rational direct_product_xi(const Rational& x1, const Rational& x2,
                           const Cardinality& o1, const Cardinality& o2);

/// Upper bound on Ξ̂(G) from a quotient G₂ = G/N: Ξ̂(G₂) − (1/|G₂| − 1/|G|).
/// The bound is attained when N is amenable.
Rational quotient_bound(const Rational& xi_hat_quotient, const Cardinality& quotient_order,
                        const Cardinality& group_order);

/// Lower bound 1 − n + ξ(S) + 1/((c−1)·β₀(S)) valid when ξ attains no
/// maximum; c is the largest girth through a generator. Throws
/// kDivisionByZero for c = 1.
Rational circuit_gain_bound(std::int64_t n, std::int64_t c, const Rational& xi_of_s,
                            std::int64_t beta0_of_s);

/// True when some finite subgraph attains Ξ̂ for the default marking:
/// finite groups, free groups, and free products of one finite group with
/// free groups. Elsewhere the circuit gain bound applies.
bool xi_maximum_attained(const GroupSpec& spec);

/// Lower bound on the balanced quotient for n ≥ 2 generators and shortest
/// relator length m, with exponent ⌈1 + m/2⌉.
Rational girth_theta_bound(std::int64_t n, std::int64_t m);

/// Upper bound index·Ξ̂(G) on Ξ̂ of a finite-index subgroup marked by a
/// Schreier basis.
Rational schreier_upper(const Rational& xi_hat_group, std::int64_t index);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Identities and inequalities relating a free product to its factors.
/// Items whose hypotheses fail are omitted.
std::vector<Check> free_product_checks(const GroupSpec& spec);

/// The product formula against the finite/amenable values, and the quotient
/// bound for dropping each factor.
std::vector<Check> direct_product_checks(const GroupSpec& spec);

}  // namespace cyclo
