#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

/// Order of a group: a finite count or infinity.
class Cardinality {
 public:
  static Cardinality finite(std::uint64_t n) { return Cardinality(n); }
  static Cardinality infinite() { return Cardinality(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }

  /// 1/|G|, with 1/infinity taken to be 0.
  Rational reciprocal() const {
    return is_finite() ? Rational(1) / Rational(*value_) : Rational(0);
  }

  std::string str() const {
    return is_finite() ? std::to_string(*value_) : "infinite";
  }

  bool operator==(const Cardinality&) const = default;

 private:
  Cardinality() = default;
  explicit Cardinality(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

struct GroupSpec;

struct CyclicSpec {
  std::uint64_t order = 1;
};

/// A finite group given by its Cayley table. `table[a][b]` is the index of
/// the product a*b; `generators` lists the element indices bound to g0, g1,
/// ... by the default marking.
struct FiniteTableSpec {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> generators;
};

struct FreeSpec {
  std::uint32_t rank = 0;
};

struct DirectProductSpec {
  std::vector<GroupSpec> factors;
};

struct FreeProductSpec {
  std::vector<GroupSpec> factors;
};

struct GroupSpec {
  std::variant<CyclicSpec, FiniteTableSpec, FreeSpec, DirectProductSpec,
               FreeProductSpec>
      node;

  static GroupSpec cyclic(std::uint64_t order) { return {CyclicSpec{order}}; }
  static GroupSpec free(std::uint32_t rank) { return {FreeSpec{rank}}; }
  static GroupSpec direct_product(std::vector<GroupSpec> factors) {
    return {DirectProductSpec{std::move(factors)}};
  }
  static GroupSpec free_product(std::vector<GroupSpec> factors) {
    return {FreeProductSpec{std::move(factors)}};
  }
  static GroupSpec finite_table(FiniteTableSpec table) {
    return {std::move(table)};
  }
};

/// Stable one-line rendering, e.g. "free_product[cyclic 2, cyclic 3]". Also
/// used as a deterministic tie-break key.
std::string describe(const GroupSpec& spec);

/// Order computed from the structure of the spec alone.
Cardinality structural_order(const GroupSpec& spec);

/// Canonical normal form of a group element as a flat token sequence. Two
/// elements of the same backend are equal iff their tokens are identical.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int32_t> tokens)
      : tokens_(std::move(tokens)) {}

  const std::vector<std::int32_t>& tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;

 private:
  std::vector<std::int32_t> tokens_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

class Group {
 public:
  virtual ~Group() = default;

  const GroupSpec& spec() const noexcept { return spec_; }

  virtual Element identity() const = 0;
  virtual Cardinality order() const = 0;
  /// Elements bound to g0, g1, ... by the default marking.
  virtual std::vector<Element> default_generators() const = 0;
  /// True iff `e` is a canonical element of this backend.
  virtual bool contains(const Element& e) const = 0;
  virtual std::string format(const Element& e) const = 0;

  /// Unchecked operations; inputs must be canonical for this backend.
  virtual Element product(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;

  /// Checked operations; throw kBackendMismatch on foreign elements.
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool equal(const Element& a, const Element& b) const;

 protected:
  explicit Group(GroupSpec spec) : spec_(std::move(spec)) {}

 private:
  GroupSpec spec_;
};

using GroupHandle = std::shared_ptr<const Group>;

/// Validates `spec` and builds its backend. Throws kInvalidSpec,
/// kInvalidTable or kTrivialFreeProductFactor.
GroupHandle make_group(const GroupSpec& spec);

inline Cardinality order_of(const GroupHandle& g) { return g->order(); }

/// Order of the subgroup generated by `gens` inside a group, by closure.
/// Returns nullopt when the closure exceeds `limit` elements.
std::optional<std::uint64_t> generated_order(const Group& group,
                                             std::span<const Element> gens,
                                             std::uint64_t limit);

/// One letter of a word: a marking symbol raised to a non-zero exponent.
struct Letter {
  std::string symbol;
  int exponent = 1;
};
using Word = std::vector<Letter>;

struct Generator {
  std::string symbol;
  Element element;
};

/// A group together with an ordered list of symbols bound to elements. The
/// marking must be reduced: no symbol may be bound to the identity.
class MarkedGroup {
 public:
  /// Symbols g0, g1, ... bound to the backend's default generators.
  static MarkedGroup default_marking(GroupHandle group);

  /// Explicit bindings. Symbols must be distinct; bound elements need not be.
  static MarkedGroup from_generators(GroupHandle group,
                                     std::vector<Generator> generators);

  /// New marking on the same group whose symbols are words in this one.
  MarkedGroup remark(
      const std::vector<std::pair<std::string, Word>>& bindings) const;

  const GroupHandle& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<Generator>& generators() const noexcept {
    return generators_;
  }
  const Element& element(std::size_t j) const {
    return generators_.at(j).element;
  }
  const std::string& symbol(std::size_t j) const {
    return generators_.at(j).symbol;
  }
  std::optional<std::size_t> index_of(const std::string& symbol) const;

  /// True when the generators coincide with the backend's default generators
  /// in order (symbol names aside).
  bool is_default() const noexcept { return is_default_; }

  /// Left-to-right product of bound elements. Throws kUnknownSymbol.
  Element evaluate_word(std::span<const Letter> word) const;

 private:
  MarkedGroup(GroupHandle group, std::vector<Generator> generators);

  GroupHandle group_;
  std::vector<Generator> generators_;
  bool is_default_ = false;
};

}  // namespace cyclo
