#include "cyclo/cyclo.h"

#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "cyclo/cayley.hpp"
#include "cyclo/error.hpp"
#include "cyclo/group.hpp"
#include "cyclo/invariants.hpp"
#include "cyclo/optimizer.hpp"
#include "cyclo/oracles.hpp"
#include "cyclo/schreier.hpp"

using namespace cyclo;

struct cyclo_group {
  GroupSpec spec;
  GroupHandle group;
  std::string description;
};

struct cyclo_marked {
  MarkedGroup marked;
};

struct cyclo_ball {
  Ball ball;
};

struct cyclo_bounds {
  std::vector<BoundRow> rows;
};

struct cyclo_balanced {
  std::vector<BalancedRow> rows;
  std::vector<Rational> growth;
  Rational estimate;
};

struct cyclo_prediction {
  Prediction p;
};

struct cyclo_checks {
  std::vector<Check> checks;
};

struct cyclo_schreier {
  SchreierReport report;
  std::vector<std::string> basis;
  std::vector<std::string> transversal;
  cyclo_checks checks;
};

namespace {

thread_local std::string last_error;

struct NullPointer {};
struct OutOfRange {};
struct Overflow {};

cyclo_status fail(cyclo_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
cyclo_status guard(F&& f) {
  try {
    f();
    return CYCLO_OK;
  } catch (const Error& e) {
    return fail(static_cast<cyclo_status>(e.code()), e.what());
  } catch (const NullPointer&) {
    return fail(CYCLO_E_NULL_POINTER, "null pointer argument");
  } catch (const OutOfRange&) {
    return fail(CYCLO_E_OUT_OF_RANGE, "index out of range");
  } catch (const Overflow&) {
    return fail(CYCLO_E_INTEGER_OVERFLOW, "rational does not fit in 64-bit integers");
  } catch (const std::bad_alloc&) {
    return fail(CYCLO_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CYCLO_E_INTERNAL, e.what());
  }
}

template <class... T>
void need(const T*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullPointer{};
}

cyclo_rational to_c(const Rational& r) {
  const auto pair = to_int64_pair(r);
  if (!pair) throw Overflow{};
  return {pair->first, pair->second};
}

Rational from_c(cyclo_rational r) {
  if (r.den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  return make_rational(r.num, r.den);
}

Cardinality cardinality(std::uint64_t order) {
  return order == 0 ? Cardinality::infinite() : Cardinality::finite(order);
}

cyclo_counts to_c(const Counts& c) {
  return {c.beta0, c.beta1, c.alpha, c.beta2, c.e_out, c.boundary_size};
}

cyclo_bound_row to_c(const BoundRow& row) {
  return {row.sup.radius,
          row.sup.ball_size,
          to_c(row.sup.xi),
          to_c(row.xi_hat_lower),
          row.sup.ratio.witness.size(),
          row.sup.ratio.connected_witness.size(),
          row.sup.ratio.iterations,
          method_name(row.sup.ratio.method)};
}

Word to_word(const cyclo_word& w) {
  if (w.length > 0) need(w.letters);
  Word out;
  for (std::size_t i = 0; i < w.length; ++i) {
    need(w.letters[i].symbol);
    out.push_back({w.letters[i].symbol, w.letters[i].exponent});
  }
  return out;
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.symbol;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

cyclo_status make_group_handle(GroupSpec spec, cyclo_group** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    auto g = make_group(spec);
    auto description = describe(spec);
    *out = new cyclo_group{std::move(spec), std::move(g), std::move(description)};
  });
}

std::vector<GroupSpec> factor_specs(const cyclo_group* const* factors, std::size_t count) {
  if (count > 0) need(factors);
  std::vector<GroupSpec> specs;
  for (std::size_t i = 0; i < count; ++i) {
    need(factors[i]);
    specs.push_back(factors[i]->spec);
  }
  return specs;
}

}  // namespace

extern "C" {

const char* cyclo_status_name(cyclo_status status) {
  switch (status) {
    case CYCLO_OK: return "ok";
    case CYCLO_E_NULL_POINTER: return "NullPointer";
    case CYCLO_E_OUT_OF_RANGE: return "OutOfRange";
    case CYCLO_E_INTEGER_OVERFLOW: return "IntegerOverflow";
    case CYCLO_E_INTERNAL: return "Internal";
    default:
      if (status >= CYCLO_E_INVALID_SPEC && status <= CYCLO_E_INVALID_ARGUMENT)
        return error_name(static_cast<ErrorCode>(status));
      return "Unknown";
  }
}

const char* cyclo_last_error(void) { return last_error.c_str(); }

cyclo_status cyclo_group_cyclic(uint64_t order, cyclo_group** out) {
  return make_group_handle(GroupSpec::cyclic(order), out);
}

cyclo_status cyclo_group_free(uint32_t rank, cyclo_group** out) {
  return make_group_handle(GroupSpec::free(rank), out);
}

cyclo_status cyclo_group_table(size_t size, const char* const* names, const uint32_t* table,
                               const uint32_t* generators, size_t generator_count,
                               cyclo_group** out) {
  FiniteTableSpec t;
  const cyclo_status s = guard([&] {
    need(names, table);
    if (generator_count > 0) need(generators);
    for (std::size_t i = 0; i < size; ++i) {
      need(names[i]);
      t.names.emplace_back(names[i]);
      t.table.emplace_back(table + i * size, table + (i + 1) * size);
    }
    t.generators.assign(generators, generators + generator_count);
  });
  if (s != CYCLO_OK) return s;
  return make_group_handle(GroupSpec::finite_table(std::move(t)), out);
}

cyclo_status cyclo_group_direct_product(const cyclo_group* const* factors, size_t count,
                                        cyclo_group** out) {
  std::vector<GroupSpec> specs;
  const cyclo_status s = guard([&] { specs = factor_specs(factors, count); });
  if (s != CYCLO_OK) return s;
  return make_group_handle(GroupSpec::direct_product(std::move(specs)), out);
}

cyclo_status cyclo_group_free_product(const cyclo_group* const* factors, size_t count,
                                      cyclo_group** out) {
  std::vector<GroupSpec> specs;
  const cyclo_status s = guard([&] { specs = factor_specs(factors, count); });
  if (s != CYCLO_OK) return s;
  return make_group_handle(GroupSpec::free_product(std::move(specs)), out);
}

void cyclo_group_destroy(cyclo_group* group) { delete group; }

cyclo_status cyclo_group_describe(const cyclo_group* group, const char** out) {
  return guard([&] {
    need(group, out);
    *out = group->description.c_str();
  });
}

cyclo_status cyclo_group_order(const cyclo_group* group, uint64_t* order, int* finite) {
  return guard([&] {
    need(group, order, finite);
    const auto o = order_of(group->group);
    *finite = o.is_finite();
    *order = o.is_finite() ? o.value() : 0;
  });
}

cyclo_status cyclo_group_facts(const cyclo_group* group, cyclo_facts* out) {
  return guard([&] {
    need(group, out);
    const Facts f = facts_of(group->spec);
    out->finite = f.order.is_finite();
    out->order = f.order.is_finite() ? f.order.value() : 0;
    out->amenable = static_cast<cyclo_amenability>(f.amenable);
    out->free_rank = f.free_rank ? static_cast<int64_t>(*f.free_rank) : -1;
    out->generators = f.generators;
    out->minimal = f.minimal;
    out->xi_maximum_attained = xi_maximum_attained(group->spec);
  });
}

cyclo_status cyclo_marked_default(const cyclo_group* group, cyclo_marked** out) {
  return guard([&] {
    need(group, out);
    *out = nullptr;
    *out = new cyclo_marked{MarkedGroup::default_marking(group->group)};
  });
}

cyclo_status cyclo_marked_remark(const cyclo_group* group, const char* const* symbols,
                                 const cyclo_word* words, size_t count, cyclo_marked** out) {
  return guard([&] {
    need(group, out, symbols, words);
    *out = nullptr;
    std::vector<std::pair<std::string, Word>> bindings;
    for (std::size_t i = 0; i < count; ++i) {
      need(symbols[i]);
      bindings.emplace_back(symbols[i], to_word(words[i]));
    }
    auto base = MarkedGroup::default_marking(group->group);
    *out = new cyclo_marked{base.remark(bindings)};
  });
}

void cyclo_marked_destroy(cyclo_marked* marked) { delete marked; }

size_t cyclo_marked_rank(const cyclo_marked* marked) {
  return marked ? marked->marked.rank() : 0;
}

const char* cyclo_marked_symbol(const cyclo_marked* marked, size_t j) {
  if (!marked || j >= marked->marked.rank()) return nullptr;
  return marked->marked.symbol(j).c_str();
}

int cyclo_marked_is_default(const cyclo_marked* marked) {
  return marked ? marked->marked.is_default() : 0;
}

cyclo_status cyclo_ball_build(const cyclo_marked* marked, uint32_t radius, size_t vertex_cap,
                              cyclo_ball** out) {
  return guard([&] {
    need(marked, out);
    *out = nullptr;
    *out = new cyclo_ball{
        Ball::build(marked->marked, radius, vertex_cap ? vertex_cap : kDefaultVertexCap)};
  });
}

void cyclo_ball_destroy(cyclo_ball* ball) { delete ball; }

size_t cyclo_ball_size(const cyclo_ball* ball) { return ball ? ball->ball.size() : 0; }

uint32_t cyclo_ball_radius(const cyclo_ball* ball) { return ball ? ball->ball.radius() : 0; }

cyclo_status cyclo_ball_sphere_size(const cyclo_ball* ball, uint32_t i, uint64_t* out) {
  return guard([&] {
    need(ball, out);
    const auto sizes = ball->ball.sphere_sizes();
    if (i >= sizes.size()) throw OutOfRange{};
    *out = sizes[i];
  });
}

cyclo_status cyclo_ball_counts(const cyclo_ball* ball, uint32_t i, cyclo_counts* out) {
  return guard([&] {
    need(ball, out);
    if (i > ball->ball.radius()) throw OutOfRange{};
    *out = to_c(sub_ball_counts(ball->ball, i));
  });
}

cyclo_status cyclo_ball_thickness(const cyclo_ball* ball, uint32_t i, uint32_t* out,
                                  int* infinite) {
  return guard([&] {
    need(ball, out, infinite);
    if (i > ball->ball.radius()) throw OutOfRange{};
    VertexSet s(ball->ball.prefix_size(i));
    std::iota(s.begin(), s.end(), VertexId{0});
    const auto t = thickness(ball->ball, s);
    *infinite = !t.has_value();
    *out = t.value_or(0);
  });
}

cyclo_status cyclo_ball_brute_xi(const cyclo_ball* ball, uint32_t i, size_t limit,
                                 cyclo_rational* out) {
  return guard([&] {
    need(ball, out);
    if (i > ball->ball.radius()) throw OutOfRange{};
    const auto g = ball->ball.prefix_graph(ball->ball.prefix_size(i));
    *out = to_c(brute_force_ratio(g, 1, limit).value - 1);
  });
}

cyclo_status cyclo_girth(const cyclo_marked* marked, size_t j, uint32_t horizon, uint32_t* out,
                         int* found) {
  return guard([&] {
    need(marked, out, found);
    if (j >= marked->marked.rank()) throw OutOfRange{};
    const auto g = girth_through_symbol(marked->marked, j, horizon);
    *found = g.has_value();
    *out = g.value_or(0);
  });
}

cyclo_status cyclo_c_value(const cyclo_marked* marked, uint32_t horizon, uint32_t* out,
                           int* found) {
  return guard([&] {
    need(marked, out, found);
    const auto c = c_value(marked->marked, horizon);
    *found = c.has_value();
    *out = c.value_or(0);
  });
}

cyclo_status cyclo_bounds_compute(const cyclo_marked* marked, uint32_t rmax, size_t vertex_cap,
                                  cyclo_bounds** out) {
  return guard([&] {
    need(marked, out);
    *out = nullptr;
    *out = new cyclo_bounds{xi_hat_lower_bounds(marked->marked, rmax,
                                                vertex_cap ? vertex_cap : kDefaultVertexCap)};
  });
}

void cyclo_bounds_destroy(cyclo_bounds* bounds) { delete bounds; }

size_t cyclo_bounds_count(const cyclo_bounds* bounds) {
  return bounds ? bounds->rows.size() : 0;
}

cyclo_status cyclo_bounds_row(const cyclo_bounds* bounds, size_t i, cyclo_bound_row* out) {
  return guard([&] {
    need(bounds, out);
    if (i >= bounds->rows.size()) throw OutOfRange{};
    *out = to_c(bounds->rows[i]);
  });
}

cyclo_status cyclo_balanced_compute(const cyclo_marked* marked, uint32_t rmax,
                                    size_t vertex_cap, cyclo_balanced** out) {
  return guard([&] {
    need(marked, out);
    *out = nullptr;
    const std::size_t cap = vertex_cap ? vertex_cap : kDefaultVertexCap;
    auto rows = balanced_sequence(marked->marked, rmax, cap);
    auto growth = growth_ratios(marked->marked, rmax, cap);
    const Rational estimate = theta_estimate(rows);
    *out = new cyclo_balanced{std::move(rows), std::move(growth), estimate};
  });
}

void cyclo_balanced_destroy(cyclo_balanced* balanced) { delete balanced; }

size_t cyclo_balanced_count(const cyclo_balanced* balanced) {
  return balanced ? balanced->rows.size() : 0;
}

cyclo_status cyclo_balanced_row_at(const cyclo_balanced* balanced, size_t i,
                                   cyclo_balanced_row* out) {
  return guard([&] {
    need(balanced, out);
    if (i >= balanced->rows.size()) throw OutOfRange{};
    const auto& r = balanced->rows[i];
    *out = {r.i, to_c(r.counts), to_c(r.xi_ball), to_c(r.theta_term)};
  });
}

cyclo_status cyclo_balanced_estimate(const cyclo_balanced* balanced, cyclo_rational* out) {
  return guard([&] {
    need(balanced, out);
    *out = to_c(balanced->estimate);
  });
}

cyclo_status cyclo_balanced_growth(const cyclo_balanced* balanced, size_t i,
                                   cyclo_rational* out) {
  return guard([&] {
    need(balanced, out);
    if (i >= balanced->growth.size()) throw OutOfRange{};
    *out = to_c(balanced->growth[i]);
  });
}

cyclo_status cyclo_predict(const cyclo_marked* marked, cyclo_quantity quantity,
                           cyclo_prediction** out) {
  return guard([&] {
    need(marked, out);
    *out = nullptr;
    Prediction p = quantity == CYCLO_PSI_HAT ? predict_psi_hat(marked->marked)
                                             : predict_xi_hat(marked->marked);
    *out = new cyclo_prediction{std::move(p)};
  });
}

void cyclo_prediction_destroy(cyclo_prediction* prediction) { delete prediction; }

cyclo_status cyclo_prediction_value(const cyclo_prediction* p, cyclo_rational* out) {
  return guard([&] {
    need(p, out);
    *out = to_c(p->p.value);
  });
}

cyclo_status cyclo_prediction_unnormalized(const cyclo_prediction* p, cyclo_rational* out) {
  return guard([&] {
    need(p, out);
    *out = to_c(p->p.unnormalized);
  });
}

const char* cyclo_prediction_rule(const cyclo_prediction* p) {
  return p ? p->p.rule.c_str() : nullptr;
}

size_t cyclo_prediction_assumption_count(const cyclo_prediction* p) {
  return p ? p->p.assumptions.size() : 0;
}

const char* cyclo_prediction_assumption(const cyclo_prediction* p, size_t i) {
  if (!p || i >= p->p.assumptions.size()) return nullptr;
  return p->p.assumptions[i].c_str();
}

cyclo_status cyclo_free_product_checks(const cyclo_group* group, cyclo_checks** out) {
  return guard([&] {
    need(group, out);
    *out = nullptr;
    *out = new cyclo_checks{free_product_checks(group->spec)};
  });
}

cyclo_status cyclo_direct_product_checks(const cyclo_group* group, cyclo_checks** out) {
  return guard([&] {
    need(group, out);
    *out = nullptr;
    *out = new cyclo_checks{direct_product_checks(group->spec)};
  });
}

void cyclo_checks_destroy(cyclo_checks* checks) { delete checks; }

size_t cyclo_checks_count(const cyclo_checks* checks) {
  return checks ? checks->checks.size() : 0;
}

cyclo_status cyclo_checks_get(const cyclo_checks* checks, size_t i, cyclo_check* out) {
  return guard([&] {
    need(checks, out);
    if (i >= checks->checks.size()) throw OutOfRange{};
    const auto& c = checks->checks[i];
    *out = {c.name.c_str(), c.passed, c.detail.c_str()};
  });
}

cyclo_status cyclo_girth_theta_bound(int64_t n, int64_t m, cyclo_rational* out) {
  return guard([&] {
    need(out);
    *out = to_c(girth_theta_bound(n, m));
  });
}

cyclo_status cyclo_circuit_gain_bound(int64_t n, int64_t c, cyclo_rational xi_of_s,
                                      int64_t beta0_of_s, cyclo_rational* out) {
  return guard([&] {
    need(out);
    *out = to_c(circuit_gain_bound(n, c, from_c(xi_of_s), beta0_of_s));
  });
}

cyclo_status cyclo_quotient_bound(cyclo_rational xi_hat_quotient, uint64_t quotient_order,
                                  uint64_t group_order, cyclo_rational* out) {
  return guard([&] {
    need(out);
    *out = to_c(quotient_bound(from_c(xi_hat_quotient), cardinality(quotient_order),
                               cardinality(group_order)));
  });
}

cyclo_status cyclo_schreier_upper(cyclo_rational xi_hat_group, int64_t index,
                                  cyclo_rational* out) {
  return guard([&] {
    need(out);
    *out = to_c(schreier_upper(from_c(xi_hat_group), index));
  });
}

cyclo_status cyclo_schreier_verify(const cyclo_group* source, const cyclo_group* target,
                                   const cyclo_word* images, size_t image_count,
                                   uint32_t radius, cyclo_schreier** out) {
  return guard([&] {
    need(source, target, out);
    if (image_count > 0) need(images);
    *out = nullptr;
    const auto target_marking = MarkedGroup::default_marking(target->group);
    std::vector<Element> elements;
    for (std::size_t i = 0; i < image_count; ++i)
      elements.push_back(target_marking.evaluate_word(to_word(images[i])));
    const FiniteHom hom = make_finite_hom(MarkedGroup::default_marking(source->group),
                                          target->group, std::move(elements));
    auto report = verify_schreier_index_bound(
        hom, radius > 0 ? std::optional<std::uint32_t>(radius) : std::nullopt);
    auto* s = new cyclo_schreier{};
    s->report = std::move(report);
    for (const auto& b : s->report.data.basis) s->basis.push_back(render(b.reduced_word));
    for (const auto& c : s->report.data.cosets) s->transversal.push_back(render(c.transversal));
    s->checks.checks = s->report.checks;
    *out = s;
  });
}

void cyclo_schreier_destroy(cyclo_schreier* s) { delete s; }

uint64_t cyclo_schreier_index(const cyclo_schreier* s) {
  return s ? s->report.data.index() : 0;
}

size_t cyclo_schreier_basis_size(const cyclo_schreier* s) {
  return s ? s->report.data.basis.size() : 0;
}

size_t cyclo_schreier_expected_basis_size(const cyclo_schreier* s) {
  return s ? s->report.data.expected_basis_size() : 0;
}

const char* cyclo_schreier_basis(const cyclo_schreier* s, size_t i) {
  if (!s || i >= s->basis.size()) return nullptr;
  return s->basis[i].c_str();
}

const char* cyclo_schreier_transversal(const cyclo_schreier* s, size_t coset) {
  if (!s || coset >= s->transversal.size()) return nullptr;
  return s->transversal[coset].c_str();
}

cyclo_status cyclo_schreier_sides(const cyclo_schreier* s, cyclo_rational* lhs,
                                  cyclo_rational* rhs, int* equal) {
  return guard([&] {
    need(s, lhs, rhs, equal);
    *lhs = to_c(s->report.lhs);
    *rhs = to_c(s->report.rhs);
    *equal = s->report.equal;
  });
}

size_t cyclo_schreier_kernel_row_count(const cyclo_schreier* s) {
  return s ? s->report.kernel_bounds.size() : 0;
}

cyclo_status cyclo_schreier_kernel_row(const cyclo_schreier* s, size_t i, cyclo_bound_row* out) {
  return guard([&] {
    need(s, out);
    if (i >= s->report.kernel_bounds.size()) throw OutOfRange{};
    *out = to_c(s->report.kernel_bounds[i]);
  });
}

const cyclo_checks* cyclo_schreier_checks(const cyclo_schreier* s) {
  return s ? &s->checks : nullptr;
}

}  // extern "C"
