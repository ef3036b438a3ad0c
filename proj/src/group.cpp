#include "cyclo/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

constexpr std::uint32_t kEagerAssociativityLimit = 256;
constexpr std::uint32_t kAssociativitySamples = 200000;

// Reads length-prefixed token blocks. Returns nullopt on malformed input.
std::optional<std::vector<Element>> split_blocks(
    const std::vector<std::int32_t>& tokens, std::size_t expected) {
  std::vector<Element> out;
  out.reserve(expected);
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::int32_t len = tokens[pos++];
    if (len < 0 || pos + static_cast<std::size_t>(len) > tokens.size())
      return std::nullopt;
    out.emplace_back(std::vector<std::int32_t>(
        tokens.begin() + static_cast<std::ptrdiff_t>(pos),
        tokens.begin() + static_cast<std::ptrdiff_t>(pos) + len));
    pos += static_cast<std::size_t>(len);
  }
  if (out.size() != expected) return std::nullopt;
  return out;
}

void append_block(std::vector<std::int32_t>& out, const Element& e) {
  out.push_back(static_cast<std::int32_t>(e.tokens().size()));
  out.insert(out.end(), e.tokens().begin(), e.tokens().end());
}

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(const GroupSpec& spec)
      : Group(spec), k_(std::get<CyclicSpec>(spec.node).order) {
    if (k_ < 1) throw Error(ErrorCode::kInvalidSpec, "cyclic order must be >= 1");
    if (k_ > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
      throw Error(ErrorCode::kInvalidSpec, "cyclic order too large");
  }

  Element identity() const override { return Element({0}); }
  Cardinality order() const override { return Cardinality::finite(k_); }
  std::vector<Element> default_generators() const override {
    if (k_ == 1) return {};
    return {Element({1})};
  }
  bool contains(const Element& e) const override {
    return e.tokens().size() == 1 && e.tokens()[0] >= 0 &&
           static_cast<std::uint64_t>(e.tokens()[0]) < k_;
  }
  std::string format(const Element& e) const override {
    return std::to_string(e.tokens()[0]);
  }
  Element product(const Element& a, const Element& b) const override {
    const auto s = (static_cast<std::uint64_t>(a.tokens()[0]) +
                    static_cast<std::uint64_t>(b.tokens()[0])) % k_;
    return Element({static_cast<std::int32_t>(s)});
  }
  Element invert(const Element& a) const override {
    const auto r = static_cast<std::uint64_t>(a.tokens()[0]);
    return Element({static_cast<std::int32_t>((k_ - r) % k_)});
  }

 private:
  std::uint64_t k_;
};

class TableGroup final : public Group {
 public:
  explicit TableGroup(const GroupSpec& spec)
      : Group(spec), t_(std::get<FiniteTableSpec>(spec.node)) {
    validate();
  }

  Element identity() const override {
    return Element({static_cast<std::int32_t>(identity_)});
  }
  Cardinality order() const override { return Cardinality::finite(k()); }
  std::vector<Element> default_generators() const override {
    std::vector<Element> out;
    for (auto g : t_.generators) out.emplace_back(std::vector<std::int32_t>{static_cast<std::int32_t>(g)});
    return out;
  }
  bool contains(const Element& e) const override {
    return e.tokens().size() == 1 && e.tokens()[0] >= 0 &&
           static_cast<std::size_t>(e.tokens()[0]) < k();
  }
  std::string format(const Element& e) const override {
    return t_.names[static_cast<std::size_t>(e.tokens()[0])];
  }
  Element product(const Element& a, const Element& b) const override {
    const auto i = static_cast<std::size_t>(a.tokens()[0]);
    const auto j = static_cast<std::size_t>(b.tokens()[0]);
    return Element({static_cast<std::int32_t>(t_.table[i][j])});
  }
  Element invert(const Element& a) const override {
    return Element({static_cast<std::int32_t>(
        inverse_[static_cast<std::size_t>(a.tokens()[0])])});
  }

 private:
  std::size_t k() const { return t_.names.size(); }

  void validate() {
    const std::size_t n = k();
    if (n == 0) throw Error(ErrorCode::kInvalidTable, "finite table has no elements");
    if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
      throw Error(ErrorCode::kInvalidTable, "finite table too large");
    {
      std::unordered_set<std::string> seen(t_.names.begin(), t_.names.end());
      if (seen.size() != n)
        throw Error(ErrorCode::kInvalidTable, "element names are not distinct");
    }
    if (t_.table.size() != n)
      throw Error(ErrorCode::kInvalidTable, "table must have one row per element");
    for (std::size_t i = 0; i < n; ++i) {
      if (t_.table[i].size() != n)
        throw Error(ErrorCode::kInvalidTable,
                    "table row " + std::to_string(i) + " has wrong length");
      for (auto v : t_.table[i])
        if (v >= n)
          throw Error(ErrorCode::kInvalidTable,
                      "table entry out of range in row " + std::to_string(i));
    }
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = t_.table[e][x] == x && t_.table[x][e] == x;
      if (ok) id = e;
    }
    if (!id) throw Error(ErrorCode::kInvalidTable, "table has no identity");
    identity_ = *id;
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::optional<std::size_t> inv;
      for (std::size_t b = 0; b < n && !inv; ++b)
        if (t_.table[a][b] == identity_ && t_.table[b][a] == identity_) inv = b;
      if (!inv)
        throw Error(ErrorCode::kInvalidTable,
                    "element '" + t_.names[a] + "' has no inverse");
      inverse_[a] = static_cast<std::uint32_t>(*inv);
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      return t_.table[t_.table[a][b]][c] == t_.table[a][t_.table[b][c]];
    };
    if (n <= kEagerAssociativityLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!assoc(a, b, c))
              throw Error(ErrorCode::kInvalidTable, "table is not associative");
    } else {
      std::mt19937_64 rng(0x5eedULL);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::uint32_t s = 0; s < kAssociativitySamples; ++s)
        if (!assoc(pick(rng), pick(rng), pick(rng)))
          throw Error(ErrorCode::kInvalidTable, "table is not associative");
    }
    for (auto g : t_.generators)
      if (g >= n)
        throw Error(ErrorCode::kInvalidTable, "declared generator out of range");
  }

  FiniteTableSpec t_;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(const GroupSpec& spec)
      : Group(spec), m_(std::get<FreeSpec>(spec.node).rank) {
    if (m_ > 1000000) throw Error(ErrorCode::kInvalidSpec, "free rank too large");
  }

  Element identity() const override { return Element(); }
  Cardinality order() const override {
    return m_ == 0 ? Cardinality::finite(1) : Cardinality::infinite();
  }
  std::vector<Element> default_generators() const override {
    std::vector<Element> out;
    for (std::uint32_t i = 1; i <= m_; ++i)
      out.emplace_back(std::vector<std::int32_t>{static_cast<std::int32_t>(i)});
    return out;
  }
  bool contains(const Element& e) const override {
    const auto& t = e.tokens();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::int32_t a = t[i] < 0 ? -t[i] : t[i];
      if (a == 0 || static_cast<std::uint32_t>(a) > m_) return false;
      if (i > 0 && t[i] == -t[i - 1]) return false;
    }
    return true;
  }
  std::string format(const Element& e) const override {
    if (e.empty()) return "1";
    std::string out;
    for (auto letter : e.tokens()) {
      const std::int32_t a = letter < 0 ? -letter : letter;
      if (m_ <= 26) {
        const char c = static_cast<char>((letter > 0 ? 'a' : 'A') + (a - 1));
        out.push_back(c);
      } else {
        if (!out.empty()) out.push_back(' ');
        out += "x" + std::to_string(a) + (letter < 0 ? "^-1" : "");
      }
    }
    return out;
  }
  Element product(const Element& a, const Element& b) const override {
    std::vector<std::int32_t> out = a.tokens();
    for (auto letter : b.tokens()) {
      if (!out.empty() && out.back() == -letter)
        out.pop_back();
      else
        out.push_back(letter);
    }
    return Element(std::move(out));
  }
  Element invert(const Element& a) const override {
    std::vector<std::int32_t> out(a.tokens().rbegin(), a.tokens().rend());
    for (auto& letter : out) letter = -letter;
    return Element(std::move(out));
  }

 private:
  std::uint32_t m_;
};

std::vector<GroupHandle> build_factors(const std::vector<GroupSpec>& specs,
                                       const char* what) {
  if (specs.empty())
    throw Error(ErrorCode::kInvalidSpec,
                std::string(what) + " needs at least one factor");
  std::vector<GroupHandle> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(make_group(s));
  return out;
}

class DirectProductGroup final : public Group {
 public:
  explicit DirectProductGroup(const GroupSpec& spec)
      : Group(spec),
        factors_(build_factors(std::get<DirectProductSpec>(spec.node).factors,
                               "direct_product")) {}

  Element identity() const override {
    std::vector<std::int32_t> out;
    for (const auto& f : factors_) append_block(out, f->identity());
    return Element(std::move(out));
  }
  Cardinality order() const override { return structural_order(spec()); }
  std::vector<Element> default_generators() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (const auto& g : factors_[i]->default_generators())
        out.push_back(embed(i, g));
    return out;
  }
  bool contains(const Element& e) const override {
    auto parts = split_blocks(e.tokens(), factors_.size());
    if (!parts) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->contains((*parts)[i])) return false;
    return true;
  }
  std::string format(const Element& e) const override {
    auto parts = split_blocks(e.tokens(), factors_.size()).value();
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ", ";
      out += factors_[i]->format(parts[i]);
    }
    return out + ")";
  }
  Element product(const Element& a, const Element& b) const override {
    auto pa = split_blocks(a.tokens(), factors_.size()).value();
    auto pb = split_blocks(b.tokens(), factors_.size()).value();
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      append_block(out, factors_[i]->product(pa[i], pb[i]));
    return Element(std::move(out));
  }
  Element invert(const Element& a) const override {
    auto pa = split_blocks(a.tokens(), factors_.size()).value();
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      append_block(out, factors_[i]->invert(pa[i]));
    return Element(std::move(out));
  }

 private:
  Element embed(std::size_t i, const Element& g) const {
    std::vector<std::int32_t> out;
    for (std::size_t j = 0; j < factors_.size(); ++j)
      append_block(out, j == i ? g : factors_[j]->identity());
    return Element(std::move(out));
  }

  std::vector<GroupHandle> factors_;
};

// Normal form: alternating syllables (factor index, length, tokens...), no
// syllable equal to its factor's identity.
class FreeProductGroup final : public Group {
 public:
  explicit FreeProductGroup(const GroupSpec& spec)
      : Group(spec),
        factors_(build_factors(std::get<FreeProductSpec>(spec.node).factors,
                               "free_product")) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto o = factors_[i]->order();
      if (o.is_finite() && o.value() < 2)
        throw Error(ErrorCode::kTrivialFreeProductFactor,
                    "free_product factor " + std::to_string(i) + " is trivial");
    }
  }

  Element identity() const override { return Element(); }
  Cardinality order() const override { return structural_order(spec()); }
  std::vector<Element> default_generators() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (const auto& g : factors_[i]->default_generators()) {
        if (g == factors_[i]->identity()) continue;
        out.push_back(encode({{i, g}}));
      }
    return out;
  }
  bool contains(const Element& e) const override {
    auto s = decode(e);
    if (!s) return false;
    for (std::size_t i = 0; i < s->size(); ++i) {
      const auto& [f, g] = (*s)[i];
      if (f >= factors_.size() || !factors_[f]->contains(g) ||
          g == factors_[f]->identity())
        return false;
      if (i > 0 && (*s)[i - 1].first == f) return false;
    }
    return true;
  }
  std::string format(const Element& e) const override {
    auto s = decode(e).value();
    if (s.empty()) return "1";
    std::string out;
    for (const auto& [f, g] : s)
      out += "[" + std::to_string(f) + ":" + factors_[f]->format(g) + "]";
    return out;
  }
  Element product(const Element& a, const Element& b) const override {
    auto left = decode(a).value();
    auto right = decode(b).value();
    std::size_t r = 0;
    while (!left.empty() && r < right.size() &&
           left.back().first == right[r].first) {
      const std::size_t f = left.back().first;
      Element merged = factors_[f]->product(left.back().second, right[r].second);
      left.pop_back();
      ++r;
      if (merged != factors_[f]->identity()) {
        left.emplace_back(f, std::move(merged));
        break;
      }
    }
    left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(r),
                right.end());
    return encode(left);
  }
  Element invert(const Element& a) const override {
    auto s = decode(a).value();
    std::reverse(s.begin(), s.end());
    for (auto& [f, g] : s) g = factors_[f]->invert(g);
    return encode(s);
  }

 private:
  using Syllables = std::vector<std::pair<std::size_t, Element>>;

  static Element encode(const Syllables& s) {
    std::vector<std::int32_t> out;
    for (const auto& [f, g] : s) {
      out.push_back(static_cast<std::int32_t>(f));
      append_block(out, g);
    }
    return Element(std::move(out));
  }

  static std::optional<Syllables> decode(const Element& e) {
    Syllables out;
    const auto& t = e.tokens();
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (pos + 2 > t.size() || t[pos] < 0 || t[pos + 1] < 0) return std::nullopt;
      const auto f = static_cast<std::size_t>(t[pos]);
      const auto len = static_cast<std::size_t>(t[pos + 1]);
      pos += 2;
      if (pos + len > t.size()) return std::nullopt;
      out.emplace_back(f, Element(std::vector<std::int32_t>(
                              t.begin() + static_cast<std::ptrdiff_t>(pos),
                              t.begin() + static_cast<std::ptrdiff_t>(pos + len))));
      pos += len;
    }
    return out;
  }

  std::vector<GroupHandle> factors_;
};

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto t : e.tokens()) {
    h ^= static_cast<std::uint32_t>(t);
    h *= 1099511628211ULL;
  }
  h ^= e.tokens().size();
  return static_cast<std::size_t>(h);
}

std::string describe(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const CyclicSpec& c) const {
      return "cyclic " + std::to_string(c.order);
    }
    std::string operator()(const FreeSpec& f) const {
      return "free " + std::to_string(f.rank);
    }
    std::string operator()(const FiniteTableSpec& t) const {
      std::string out = "finite_table[";
      for (std::size_t i = 0; i < t.names.size(); ++i)
        out += (i ? " " : "") + t.names[i];
      return out + "]";
    }
    std::string list(const char* name, const std::vector<GroupSpec>& fs) const {
      std::string out = std::string(name) + "[";
      for (std::size_t i = 0; i < fs.size(); ++i)
        out += (i ? ", " : "") + describe(fs[i]);
      return out + "]";
    }
    std::string operator()(const DirectProductSpec& d) const {
      return list("direct_product", d.factors);
    }
    std::string operator()(const FreeProductSpec& f) const {
      return list("free_product", f.factors);
    }
  };
  return std::visit(Visitor{}, spec.node);
}

Cardinality structural_order(const GroupSpec& spec) {
  struct Visitor {
    Cardinality operator()(const CyclicSpec& c) const {
      return Cardinality::finite(c.order);
    }
    Cardinality operator()(const FreeSpec& f) const {
      return f.rank == 0 ? Cardinality::finite(1) : Cardinality::infinite();
    }
    Cardinality operator()(const FiniteTableSpec& t) const {
      return Cardinality::finite(t.names.size());
    }
    Cardinality operator()(const DirectProductSpec& d) const {
      std::uint64_t total = 1;
      bool infinite = false;
      for (const auto& f : d.factors) {
        const auto o = structural_order(f);
        if (!o.is_finite()) {
          infinite = true;
          continue;
        }
        if (o.value() != 0 &&
            total > std::numeric_limits<std::uint64_t>::max() / o.value())
          throw Error(ErrorCode::kInvalidSpec, "group order overflows 64 bits");
        total *= o.value();
      }
      return infinite ? Cardinality::infinite() : Cardinality::finite(total);
    }
    Cardinality operator()(const FreeProductSpec& f) const {
      if (f.factors.size() == 1) return structural_order(f.factors[0]);
      return Cardinality::infinite();
    }
  };
  return std::visit(Visitor{}, spec.node);
}

GroupHandle make_group(const GroupSpec& spec) {
  struct Visitor {
    const GroupSpec& spec;
    GroupHandle operator()(const CyclicSpec&) const {
      return std::make_shared<CyclicGroup>(spec);
    }
    GroupHandle operator()(const FiniteTableSpec&) const {
      return std::make_shared<TableGroup>(spec);
    }
    GroupHandle operator()(const FreeSpec&) const {
      return std::make_shared<FreeGroup>(spec);
    }
    GroupHandle operator()(const DirectProductSpec&) const {
      return std::make_shared<DirectProductGroup>(spec);
    }
    GroupHandle operator()(const FreeProductSpec&) const {
      return std::make_shared<FreeProductGroup>(spec);
    }
  };
  return std::visit(Visitor{spec}, spec.node);
}

Element Group::multiply(const Element& a, const Element& b) const {
  if (!contains(a) || !contains(b))
    throw Error(ErrorCode::kBackendMismatch,
                "element is not canonical for " + describe(spec_));
  return product(a, b);
}

Element Group::inverse(const Element& a) const {
  if (!contains(a))
    throw Error(ErrorCode::kBackendMismatch,
                "element is not canonical for " + describe(spec_));
  return invert(a);
}

bool Group::equal(const Element& a, const Element& b) const {
  if (!contains(a) || !contains(b))
    throw Error(ErrorCode::kBackendMismatch,
                "element is not canonical for " + describe(spec_));
  return a == b;
}

std::optional<std::uint64_t> generated_order(const Group& group,
                                             std::span<const Element> gens,
                                             std::uint64_t limit) {
  std::vector<Element> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(group.invert(g));
  }
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> queue;
  seen.insert(group.identity());
  queue.push_back(group.identity());
  while (!queue.empty()) {
    Element v = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : steps) {
      Element w = group.product(v, s);
      if (seen.insert(w).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(w));
      }
    }
  }
  return seen.size();
}

MarkedGroup::MarkedGroup(GroupHandle group, std::vector<Generator> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  if (generators_.empty())
    throw Error(ErrorCode::kInvalidSpec, "a marking needs at least one generator");
  std::unordered_set<std::string> symbols;
  const Element id = group_->identity();
  for (const auto& g : generators_) {
    if (g.symbol.empty())
      throw Error(ErrorCode::kInvalidSpec, "generator symbols must be non-empty");
    if (!symbols.insert(g.symbol).second)
      throw Error(ErrorCode::kInvalidSpec, "duplicate generator symbol '" + g.symbol + "'");
    if (!group_->contains(g.element))
      throw Error(ErrorCode::kBackendMismatch,
                  "generator '" + g.symbol + "' is not an element of the group");
    if (g.element == id)
      throw Error(ErrorCode::kIdentityGenerator,
                  "generator '" + g.symbol + "' is bound to the identity");
  }
  const auto defaults = group_->default_generators();
  is_default_ = defaults.size() == generators_.size() &&
                std::equal(defaults.begin(), defaults.end(), generators_.begin(),
                           [](const Element& e, const Generator& g) {
                             return e == g.element;
                           });
}

MarkedGroup MarkedGroup::default_marking(GroupHandle group) {
  std::vector<Generator> gens;
  const auto defaults = group->default_generators();
  for (std::size_t i = 0; i < defaults.size(); ++i)
    gens.push_back({"g" + std::to_string(i), defaults[i]});
  return MarkedGroup(std::move(group), std::move(gens));
}

MarkedGroup MarkedGroup::from_generators(GroupHandle group,
                                         std::vector<Generator> generators) {
  return MarkedGroup(std::move(group), std::move(generators));
}

MarkedGroup MarkedGroup::remark(
    const std::vector<std::pair<std::string, Word>>& bindings) const {
  std::vector<Generator> gens;
  gens.reserve(bindings.size());
  for (const auto& [symbol, word] : bindings)
    gens.push_back({symbol, evaluate_word(word)});
  return MarkedGroup(group_, std::move(gens));
}

std::optional<std::size_t> MarkedGroup::index_of(const std::string& symbol) const {
  for (std::size_t j = 0; j < generators_.size(); ++j)
    if (generators_[j].symbol == symbol) return j;
  return std::nullopt;
}

Element MarkedGroup::evaluate_word(std::span<const Letter> word) const {
  Element acc = group_->identity();
  for (const auto& letter : word) {
    const auto j = index_of(letter.symbol);
    if (!j)
      throw Error(ErrorCode::kUnknownSymbol,
                  "unknown generator symbol '" + letter.symbol + "'");
    if (letter.exponent == 0)
      throw Error(ErrorCode::kInvalidArgument, "word exponents must be non-zero");
    const Element& g = generators_[*j].element;
    const Element step = letter.exponent > 0 ? g : group_->invert(g);
    const int reps = letter.exponent > 0 ? letter.exponent : -letter.exponent;
    for (int r = 0; r < reps; ++r) acc = group_->product(acc, step);
  }
  return acc;
}

}  // namespace cyclo
