#include "cyclo/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <span>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

constexpr std::size_t kSubsetSearchLimit = 20;

[[noreturn]] void unsupported(const std::string& why) {
  throw Error(ErrorCode::kUnsupported, why);
}

Cardinality times(const Cardinality& a, const Cardinality& b) {
  if (!a.is_finite() || !b.is_finite()) return Cardinality::infinite();
  return Cardinality::finite(a.value() * b.value());
}

Rational rat(std::uint64_t v) { return Rational(Integer(v)); }

std::string show(const Rational& r) { return to_string(r); }

const std::vector<GroupSpec>* factors_of(const GroupSpec& s) {
  if (auto* d = std::get_if<DirectProductSpec>(&s.node)) return &d->factors;
  if (auto* f = std::get_if<FreeProductSpec>(&s.node)) return &f->factors;
  return nullptr;
}

std::size_t generator_count(const GroupSpec& s) {
  struct Visitor {
    std::size_t operator()(const CyclicSpec& c) const { return c.order >= 2 ? 1 : 0; }
    std::size_t operator()(const FiniteTableSpec& t) const { return t.generators.size(); }
    std::size_t operator()(const FreeSpec& f) const { return f.rank; }
    std::size_t operator()(const DirectProductSpec& d) const { return sum(d.factors); }
    std::size_t operator()(const FreeProductSpec& f) const { return sum(f.factors); }
    static std::size_t sum(const std::vector<GroupSpec>& fs) {
      std::size_t n = 0;
      for (const auto& f : fs) n += generator_count(f);
      return n;
    }
  };
  return std::visit(Visitor{}, s.node);
}

bool is_free(const GroupSpec& s) {
  if (auto* f = std::get_if<FreeSpec>(&s.node)) return f->rank >= 1;
  if (auto* fp = std::get_if<FreeProductSpec>(&s.node))
    return std::all_of(fp->factors.begin(), fp->factors.end(), is_free);
  if (auto* dp = std::get_if<DirectProductSpec>(&s.node)) {
    std::size_t nontrivial = 0;
    bool free = false;
    for (const auto& f : dp->factors) {
      if (structural_order(f) == Cardinality::finite(1)) continue;
      ++nontrivial;
      free = is_free(f);
    }
    return nontrivial == 1 && free;
  }
  return false;
}

bool single_generated_cyclic(const GroupSpec& s) {
  if (auto* c = std::get_if<CyclicSpec>(&s.node)) return c->order >= 2;
  if (auto* f = std::get_if<FreeSpec>(&s.node)) return f->rank == 1;
  return false;
}

// Unnormalized Ξ and Ψ for the default marking.
struct Values {
  std::size_t n = 0;
  Cardinality order = Cardinality::finite(1);
  Rational xi;
  std::optional<Rational> psi;
  std::string rule;
  std::string psi_rule;
  std::vector<std::string> assumptions;
};

struct FiniteSubgroup {
  std::size_t size = 0;  // number of generators in the subset
  std::uint64_t order = 1;
  std::uint64_t mask = 0;
};

class Context {
 public:
  Cardinality sub_order(const GroupSpec& s, std::span<const char> pick) {
    if (std::none_of(pick.begin(), pick.end(), [](char c) { return c != 0; }))
      return Cardinality::finite(1);
    if (std::holds_alternative<CyclicSpec>(s.node)) return structural_order(s);
    if (std::holds_alternative<FreeSpec>(s.node)) return Cardinality::infinite();
    if (auto* t = std::get_if<FiniteTableSpec>(&s.node)) {
      const Group& g = table_group(s);
      std::vector<Element> gens;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (pick[i])
          gens.emplace_back(std::vector<std::int32_t>{static_cast<std::int32_t>(t->generators[i])});
      return Cardinality::finite(*generated_order(g, gens, t->names.size()));
    }
    const auto& fs = *factors_of(s);
    const bool direct = std::holds_alternative<DirectProductSpec>(s.node);
    Cardinality total = Cardinality::finite(1);
    std::size_t touched = 0;
    std::size_t pos = 0;
    std::optional<Cardinality> single;
    for (const auto& f : fs) {
      const std::size_t k = generator_count(f);
      auto part = pick.subspan(pos, k);
      pos += k;
      if (std::none_of(part.begin(), part.end(), [](char c) { return c != 0; })) continue;
      ++touched;
      const Cardinality o = sub_order(f, part);
      total = times(total, o);
      single = o;
    }
    if (direct) return total;
    // Free product: non-trivial subgroups of two different factors generate
    // an infinite subgroup.
    return touched >= 2 ? Cardinality::infinite() : *single;
  }

  Cardinality sub_order_mask(const GroupSpec& s, std::uint64_t mask) {
    const std::size_t n = generator_count(s);
    std::vector<char> pick(n, 0);
    for (std::size_t i = 0; i < n; ++i) pick[i] = (mask >> i) & 1u;
    return sub_order(s, pick);
  }

  bool generates(const GroupSpec& s) {
    if (auto* t = std::get_if<FiniteTableSpec>(&s.node)) {
      std::vector<char> all(t->generators.size(), 1);
      return sub_order(s, all) == Cardinality::finite(t->names.size());
    }
    if (auto* fs = factors_of(s))
      return std::all_of(fs->begin(), fs->end(), [&](const GroupSpec& f) { return generates(f); });
    return true;
  }

  bool minimal(const GroupSpec& s) {
    if (auto* t = std::get_if<FiniteTableSpec>(&s.node)) {
      const std::size_t n = t->generators.size();
      const auto full = sub_order_mask(s, (std::uint64_t{1} << n) - 1);
      for (std::size_t i = 0; i < n; ++i)
        if (sub_order_mask(s, ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << i)) == full)
          return false;
      return true;
    }
    if (auto* fs = factors_of(s))
      return std::all_of(fs->begin(), fs->end(), [&](const GroupSpec& f) { return minimal(f); });
    return true;
  }

  // Subset of the marking generating a finite subgroup: largest subset
  // first, then smallest subgroup, then lowest mask.
  std::optional<FiniteSubgroup> finite_subgroup(const GroupSpec& s) {
    const std::size_t n = generator_count(s);
    if (n > kSubsetSearchLimit) unsupported("too many generators for the subgroup search");
    std::optional<FiniteSubgroup> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const auto o = sub_order_mask(s, mask);
      if (!o.is_finite()) continue;
      const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
      if (!best || size > best->size || (size == best->size && o.value() < best->order))
        best = FiniteSubgroup{size, o.value(), mask};
    }
    return best;
  }

  std::optional<Rational> general_psi(const GroupSpec& s, const Rational& xi) {
    const auto h = finite_subgroup(s);
    if (!h) return xi;
    for (std::size_t i = 0; i < generator_count(s); ++i) {
      if (!((h->mask >> i) & 1u)) continue;
      if (sub_order_mask(s, h->mask & ~(std::uint64_t{1} << i)).value() == h->order)
        return std::nullopt;
    }
    const Rational m = rat(h->size);
    const Rational psi_h = m - 1 + m / (rat(h->order) - 1);
    return std::max(xi, psi_h);
  }

  Facts facts(const GroupSpec& s) {
    Facts f;
    f.order = structural_order(s);
    f.generators = generator_count(s);
    f.minimal = minimal(s);
    f.amenable = amenability(s);
    f.free_rank = free_rank(s);
    return f;
  }

  Values values(const GroupSpec& s) {
    Values v;
    v.n = generator_count(s);
    v.order = structural_order(s);
    if (v.n == 0) unsupported("the default marking of " + describe(s) + " is empty");
    if (!generates(s))
      unsupported("declared generators of " + describe(s) + " do not generate the table");
    const Rational n = rat(v.n);
    const bool min = minimal(s);
    const Amenability amen = amenability(s);

    if (v.order.is_finite()) {
      const Rational o = rat(v.order.value());
      v.xi = n - 1 + 1 / o;
      if (min) v.psi = n - 1 + n / (o - 1);
      v.rule = "finite-order";
      v.psi_rule = "finite-minimal";
    } else if (amen == Amenability::kYes) {
      v.xi = n - 1;
      if (min) v.psi = n - 1;
      v.rule = "infinite-amenable";
      v.psi_rule = "infinite-amenable";
    } else if (auto* f = std::get_if<FreeSpec>(&s.node)) {
      (void)f;
      v.xi = 0;
      v.psi = Rational(0);
      v.rule = "free";
      v.psi_rule = "free";
    } else if (auto* dp = std::get_if<DirectProductSpec>(&s.node)) {
      std::vector<const GroupSpec*> nontrivial;
      for (const auto& f : dp->factors)
        if (structural_order(f) != Cardinality::finite(1)) nontrivial.push_back(&f);
      if (nontrivial.size() == 1) return values(*nontrivial[0]);
      Values first = values(*nontrivial[0]);
      Rational xhat = 1 - rat(first.n) + first.xi;
      Cardinality o = first.order;
      for (std::size_t i = 1; i < nontrivial.size(); ++i) {
        Values next = values(*nontrivial[i]);
        xhat = direct_product_xi(xhat, 1 - rat(next.n) + next.xi, o, next.order);
        o = times(o, next.order);
      }
      v.xi = n - 1 + xhat;
      if (min) v.psi = general_psi(s, v.xi);
      v.rule = "direct-product";
      v.psi_rule = "finite-subgroup-search";
    } else if (std::holds_alternative<FreeProductSpec>(s.node)) {
      const auto& fs = std::get<FreeProductSpec>(s.node).factors;
      if (fs.size() == 1) return values(fs[0]);
      return free_product_values(s);
    } else {
      unsupported("no closed form for " + describe(s));
    }
    return v;
  }

  struct Ordered {
    std::vector<std::size_t> order;  // factor indices by Ψ descending
    std::vector<Values> factors;     // in spec order
  };

  Ordered ordered_factors(const GroupSpec& s) {
    const auto& fs = std::get<FreeProductSpec>(s.node).factors;
    Ordered out;
    for (const auto& f : fs) {
      out.factors.push_back(values(f));
      if (!out.factors.back().psi)
        unsupported("psi of factor " + describe(f) + " needs a minimal marking");
    }
    out.order.resize(fs.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
      const auto& pa = *out.factors[a].psi;
      const auto& pb = *out.factors[b].psi;
      if (pa != pb) return pa > pb;
      return describe(fs[a]) < describe(fs[b]);
    });
    return out;
  }

  // The free-product formula, applied even where the amenable route is
  // taken instead.
  Values free_product_values(const GroupSpec& s) {
    const auto& fs = std::get<FreeProductSpec>(s.node).factors;
    Ordered ord = ordered_factors(s);
    const Values& g1 = ord.factors[ord.order[0]];
    const Values& g2 = ord.factors[ord.order[1]];
    Values v;
    v.n = generator_count(s);
    v.order = structural_order(s);
    v.psi = g1.psi;
    v.psi_rule = "free-product-top-factor";
    v.assumptions.push_back("factors ordered by unnormalized psi: " + [&] {
      std::string out;
      for (auto i : ord.order) out += (out.empty() ? "" : ", ") + describe(fs[i]);
      return out;
    }());
    if (*g1.psi == g1.xi) {
      v.xi = g1.xi;
      v.rule = "free-product-top-factor";
      return v;
    }
    const auto h = finite_subgroup(fs[ord.order[0]]);
    if (!h) {
      v.xi = g1.xi;
      v.rule = "free-product-top-factor";
      return v;
    }
    const Rational m = rat(h->size);
    const Rational oh = rat(h->order);
    const Rational xi_h = m - 1 + 1 / oh;
    v.xi = std::max(g1.xi, xi_h + *g2.psi / oh);
    v.rule = "free-product-finite-subgroup";
    v.assumptions.push_back("finite subgroup of the top factor has order " +
                            std::to_string(h->order) + " on " +
                            std::to_string(h->size) + " generators");
    return v;
  }

  Amenability amenability(const GroupSpec& s) {
    struct Visitor {
      Context& ctx;
      Amenability operator()(const CyclicSpec&) const { return Amenability::kYes; }
      Amenability operator()(const FiniteTableSpec&) const { return Amenability::kYes; }
      Amenability operator()(const FreeSpec& f) const {
        return f.rank <= 1 ? Amenability::kYes : Amenability::kNo;
      }
      Amenability operator()(const DirectProductSpec& d) const {
        bool unknown = false;
        for (const auto& f : d.factors) {
          const auto a = ctx.amenability(f);
          if (a == Amenability::kNo) return Amenability::kNo;
          if (a == Amenability::kUnknown) unknown = true;
        }
        return unknown ? Amenability::kUnknown : Amenability::kYes;
      }
      Amenability operator()(const FreeProductSpec& f) const {
        if (f.factors.size() == 1) return ctx.amenability(f.factors[0]);
        if (f.factors.size() == 2 &&
            structural_order(f.factors[0]) == Cardinality::finite(2) &&
            structural_order(f.factors[1]) == Cardinality::finite(2))
          return Amenability::kYes;
        return Amenability::kNo;
      }
    };
    return std::visit(Visitor{*this}, s.node);
  }

  std::optional<std::uint32_t> free_rank(const GroupSpec& s) {
    if (!is_free(s)) return std::nullopt;
    return static_cast<std::uint32_t>(generator_count(s));
  }

 private:
  const Group& table_group(const GroupSpec& s) {
    auto& slot = tables_[&std::get<FiniteTableSpec>(s.node)];
    if (!slot) slot = make_group(s);
    return *slot;
  }

  std::map<const FiniteTableSpec*, GroupHandle> tables_;
};

Prediction finish(Quantity q, const Values& v, const Rational& unnormalized,
                  const std::string& rule) {
  Prediction p;
  p.quantity = q;
  p.unnormalized = unnormalized;
  p.value = 1 - rat(v.n) + unnormalized;
  p.rule = rule;
  p.assumptions = v.assumptions;
  p.assumptions.insert(p.assumptions.begin(), "default marking with " +
                                                  std::to_string(v.n) + " generators");
  const Rational lo = 1 - rat(v.n);
  if (p.value < lo || p.value > 1)
    throw Error(ErrorCode::kInvalidArgument, "prediction left the admissible range");
  return p;
}

void require_default(const MarkedGroup& m) {
  if (!m.is_default())
    unsupported("closed forms cover the default marking only");
}

Check make_check(std::string name, bool passed, std::string detail) {
  return Check{std::move(name), passed, std::move(detail)};
}

Rational reciprocal(const Cardinality& c) { return c.reciprocal(); }

}  // namespace

const char* amenability_name(Amenability a) noexcept {
  switch (a) {
    case Amenability::kYes: return "yes";
    case Amenability::kNo: return "no";
    case Amenability::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* quantity_name(Quantity q) noexcept {
  return q == Quantity::kXiHat ? "xi_hat" : "psi_hat";
}

Facts facts_of(const GroupSpec& spec) {
  Context ctx;
  return ctx.facts(spec);
}

Prediction predict_xi_hat(const GroupSpec& spec) {
  make_group(spec);
  Context ctx;
  const Values v = ctx.values(spec);
  return finish(Quantity::kXiHat, v, v.xi, v.rule);
}

Prediction predict_xi_hat(const MarkedGroup& marked) {
  require_default(marked);
  return predict_xi_hat(marked.group()->spec());
}

Prediction predict_psi_hat(const GroupSpec& spec) {
  make_group(spec);
  Context ctx;
  if (!ctx.minimal(spec)) unsupported("psi closed forms need a minimal marking");
  const Values v = ctx.values(spec);
  if (!v.psi) unsupported("no psi closed form for " + describe(spec));
  return finish(Quantity::kPsiHat, v, *v.psi, v.psi_rule);
}

Prediction predict_psi_hat(const MarkedGroup& marked) {
  require_default(marked);
  return predict_psi_hat(marked.group()->spec());
}

Rational direct_product_xi(const Rational& x1, const Rational& x2,
                           const Cardinality& o1, const Cardinality& o2) {
  const Rational r1 = reciprocal(o1);
  const Rational r2 = reciprocal(o2);
  return x1 + x2 - (r1 + r2 - r1 * r2);
}

Rational quotient_bound(const Rational& xi_hat_quotient, const Cardinality& quotient_order,
                        const Cardinality& group_order) {
  return xi_hat_quotient - (reciprocal(quotient_order) - reciprocal(group_order));
}

Rational circuit_gain_bound(std::int64_t n, std::int64_t c, const Rational& xi_of_s,
                            std::int64_t beta0_of_s) {
  if (c == 1) throw Error(ErrorCode::kDivisionByZero, "circuit length c = 1");
  if (c < 1 || beta0_of_s < 1 || n < 1)
    throw Error(ErrorCode::kInvalidArgument, "circuit gain needs n, c, beta0 >= 1");
  return Rational(1 - n) + xi_of_s + make_rational(1, (c - 1) * beta0_of_s);
}

bool xi_maximum_attained(const GroupSpec& spec) {
  if (structural_order(spec).is_finite() || is_free(spec)) return true;
  if (auto* fs = factors_of(spec)) {
    std::vector<const GroupSpec*> nontrivial;
    for (const auto& f : *fs)
      if (structural_order(f) != Cardinality::finite(1)) nontrivial.push_back(&f);
    if (nontrivial.size() == 1) return xi_maximum_attained(*nontrivial[0]);
    if (std::holds_alternative<FreeProductSpec>(spec.node)) {
      std::size_t non_free = 0;
      bool finite = true;
      for (auto* f : nontrivial)
        if (!is_free(*f)) {
          ++non_free;
          finite = structural_order(*f).is_finite();
        }
      return non_free <= 1 && finite;
    }
  }
  return false;
}

Rational girth_theta_bound(std::int64_t n, std::int64_t m) {
  if (n < 2 || m < 1)
    throw Error(ErrorCode::kInvalidArgument, "girth bound needs n >= 2 and m >= 1");
  const std::int64_t exponent = 1 + (m + 1) / 2;
  Integer power = 1;
  for (std::int64_t i = 0; i < exponent; ++i) power *= Integer(2 * n - 1);
  return Rational(1 - n) + Rational(Integer(2 * (n - 1)), Integer(m) * (power - 1));
}

Rational schreier_upper(const Rational& xi_hat_group, std::int64_t index) {
  if (index < 1) throw Error(ErrorCode::kInvalidArgument, "index must be positive");
  return Rational(index) * xi_hat_group;
}

std::vector<Check> free_product_checks(const GroupSpec& spec) {
  std::vector<Check> out;
  auto* fp = std::get_if<FreeProductSpec>(&spec.node);
  if (!fp || fp->factors.size() < 2) return out;
  make_group(spec);
  Context ctx;
  const Values routed = ctx.values(spec);
  const Values formula = ctx.free_product_values(spec);
  const auto ord = ctx.ordered_factors(spec);
  const auto& fs = fp->factors;
  const Values& g1 = ord.factors[ord.order[0]];
  const Values& g2 = ord.factors[ord.order[1]];
  const Rational r = rat(fs.size());
  const Rational n = rat(routed.n);
  const Rational xi = routed.xi;
  const Rational xi_hat = 1 - n + xi;

  if (routed.rule != formula.rule)
    out.push_back(make_check("routes-agree", formula.xi == routed.xi,
                             routed.rule + " gives " + show(routed.xi) + ", " +
                                 formula.rule + " gives " + show(formula.xi)));

  out.push_back(make_check("psi-sandwich", *g2.psi <= xi && xi <= *g1.psi,
                           show(*g2.psi) + " <= " + show(xi) + " <= " + show(*g1.psi)));

  Rational max_xi = ord.factors[0].xi;
  for (const auto& f : ord.factors) max_xi = std::max(max_xi, f.xi);
  out.push_back(make_check("max-factor-xi", xi >= max_xi,
                           show(xi) + " >= " + show(max_xi)));

  Rational rank_sum = 1 - r;
  std::size_t non_free = 0;
  std::size_t order_two = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    rank_sum += 1 - rat(ord.factors[i].n) + ord.factors[i].xi;
    if (!is_free(fs[i])) {
      ++non_free;
      if (structural_order(fs[i]) == Cardinality::finite(2)) ++order_two;
    }
  }
  const bool equality_expected = non_free <= 1 || (non_free == 2 && order_two == 2);
  out.push_back(make_check("rank-sum", xi_hat <= rank_sum,
                           show(xi_hat) + " <= " + show(rank_sum)));
  out.push_back(make_check("rank-sum-equality", (xi_hat == rank_sum) == equality_expected,
                           std::string("equality ") + (xi_hat == rank_sum ? "holds" : "fails") +
                               ", expected to " + (equality_expected ? "hold" : "fail")));

  const GroupSpec& top = fs[ord.order[0]];
  const auto top_amen = ctx.amenability(top);
  const Rational n1 = rat(g1.n);
  if (!g1.order.is_finite() && top_amen == Amenability::kYes)
    out.push_back(make_check("amenable-top-factor", xi_hat == n1 - n,
                             show(xi_hat) + " == " + show(n1 - n)));
  if (g1.order.is_finite()) {
    const Rational o1 = rat(g1.order.value());
    const Rational expect = n1 - 1 + (*g2.psi + 1) / o1;
    out.push_back(make_check("finite-top-factor", xi == expect,
                             show(xi) + " == " + show(expect)));
    if (g2.order.is_finite()) {
      const Rational o2 = rat(g2.order.value());
      const Rational both = n1 - 1 + rat(g2.n) * o2 / (o1 * (o2 - 1));
      out.push_back(make_check("finite-top-factors", xi == both,
                               show(xi) + " == " + show(both)));
    }
  }
  if (std::all_of(fs.begin(), fs.end(), single_generated_cyclic)) {
    const Rational inv1 = g1.order.reciprocal();
    const Rational inv2 = g2.order.reciprocal();
    const Rational expect = 1 - r + inv1 / (1 - inv2);
    out.push_back(make_check("cyclic-factors", xi_hat == expect,
                             show(xi_hat) + " == " + show(expect)));
  }
  if (ctx.minimal(spec)) {
    if (auto psi = ctx.general_psi(spec, xi))
      out.push_back(make_check("psi-top-factor", *psi == *g1.psi,
                               show(*psi) + " == " + show(*g1.psi)));
  }
  return out;
}

std::vector<Check> direct_product_checks(const GroupSpec& spec) {
  std::vector<Check> out;
  auto* dp = std::get_if<DirectProductSpec>(&spec.node);
  if (!dp) return out;
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < dp->factors.size(); ++i)
    if (structural_order(dp->factors[i]) != Cardinality::finite(1)) nontrivial.push_back(i);
  if (nontrivial.size() < 2) return out;
  make_group(spec);
  Context ctx;
  const Values whole = ctx.values(spec);
  const Rational xi_hat = 1 - rat(whole.n) + whole.xi;

  // Product formula folded over the factors, compared with the value for
  // the whole group when that has its own closed form.
  Rational fold;
  Cardinality order = Cardinality::finite(1);
  bool first = true;
  for (auto i : nontrivial) {
    const Values f = ctx.values(dp->factors[i]);
    const Rational fx = 1 - rat(f.n) + f.xi;
    if (first) {
      fold = fx;
      order = f.order;
      first = false;
    } else {
      fold = direct_product_xi(fold, fx, order, f.order);
      order = times(order, f.order);
    }
  }
  if (ctx.amenability(spec) == Amenability::kYes) {
    const Rational expect = whole.order.reciprocal();
    out.push_back(make_check("product-formula", fold == expect,
                             show(fold) + " == " + show(expect)));
  }

  for (auto i : nontrivial) {
    std::vector<GroupSpec> rest;
    for (auto j : nontrivial)
      if (j != i) rest.push_back(dp->factors[j]);
    const GroupSpec quotient =
        rest.size() == 1 ? rest[0] : GroupSpec::direct_product(rest);
    const Values q = ctx.values(quotient);
    const Rational q_hat = 1 - rat(q.n) + q.xi;
    const Rational bound = quotient_bound(q_hat, q.order, whole.order);
    const bool kernel_amenable = ctx.amenability(dp->factors[i]) == Amenability::kYes;
    const bool ok = xi_hat <= bound && (!kernel_amenable || xi_hat == bound);
    out.push_back(make_check(
        "quotient-by-" + describe(dp->factors[i]), ok,
        show(xi_hat) + " <= " + show(bound) +
            (kernel_amenable ? " with equality (amenable kernel)" : "")));
  }
  return out;
}

}  // namespace cyclo
