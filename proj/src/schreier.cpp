#include "cyclo/schreier.hpp"

#include <unordered_map>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->symbol, -it->exponent});
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Element image_of(const FiniteHom& hom, const Word& w) {
  Element acc = hom.target->identity();
  for (const auto& letter : w) {
    const Element& x = hom.images.at(hom.source.index_of(letter.symbol).value());
    const Element step = letter.exponent > 0 ? x : hom.target->invert(x);
    for (int k = 0; k < std::abs(letter.exponent); ++k) acc = hom.target->product(acc, step);
  }
  return acc;
}

// Free group tokens are ±(i+1) for the i-th default generator.
Word word_of_free_element(const MarkedGroup& source, const Element& e) {
  Word out;
  for (auto t : e.tokens()) {
    const auto j = static_cast<std::size_t>(std::abs(t) - 1);
    if (!out.empty() && out.back().symbol == source.symbol(j) &&
        (out.back().exponent > 0) == (t > 0))
      out.back().exponent += t > 0 ? 1 : -1;
    else
      out.push_back({source.symbol(j), t > 0 ? 1 : -1});
  }
  return out;
}

}  // namespace

FiniteHom make_finite_hom(MarkedGroup source, GroupHandle target,
                          std::vector<Element> images) {
  if (!std::holds_alternative<FreeSpec>(source.group()->spec().node) || !source.is_default())
    throw Error(ErrorCode::kUnsupported, "the source must be a free group with its standard marking");
  const auto order = order_of(target);
  if (!order.is_finite()) throw Error(ErrorCode::kUnsupported, "the target must be finite");
  if (images.size() != source.rank())
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(source.rank()) +
                                                 " images, got " + std::to_string(images.size()));
  for (const auto& e : images)
    if (!target->contains(e))
      throw Error(ErrorCode::kBackendMismatch, "image is not an element of the target");
  if (generated_order(*target, images, order.value()) != order.value())
    throw Error(ErrorCode::kImagesDoNotGenerate, "images do not generate the target");
  return FiniteHom{std::move(source), std::move(target), std::move(images)};
}

SchreierData build_schreier(const FiniteHom& hom) {
  SchreierData data;
  data.source_rank = hom.source.rank();
  const Group& q = *hom.target;
  std::unordered_map<Element, std::uint32_t, ElementHash> index;
  data.cosets.push_back({q.identity(), {}});
  index.emplace(q.identity(), 0);
  std::vector<Element> inverse_images;
  for (const auto& x : hom.images) inverse_images.push_back(q.invert(x));

  for (std::uint32_t v = 0; v < data.cosets.size(); ++v) {
    for (std::size_t j = 0; j < data.source_rank; ++j) {
      for (int sign : {1, -1}) {
        const Element next =
            q.product(data.cosets[v].representative, sign > 0 ? hom.images[j] : inverse_images[j]);
        if (index.contains(next)) continue;
        const auto child = static_cast<std::uint32_t>(data.cosets.size());
        index.emplace(next, child);
        Word w = data.cosets[v].transversal;
        w.push_back({hom.source.symbol(j), sign});
        data.cosets.push_back({next, std::move(w)});
        data.tree.push_back({v, child, j, sign});
      }
    }
  }

  const Group& f = *hom.source.group();
  for (std::uint32_t v = 0; v < data.cosets.size(); ++v) {
    for (std::size_t j = 0; j < data.source_rank; ++j) {
      const Element target = q.product(data.cosets[v].representative, hom.images[j]);
      const auto& back = data.cosets[index.at(target)].transversal;
      Word w = concat(data.cosets[v].transversal, Word{{hom.source.symbol(j), 1}});
      w = concat(std::move(w), inverse_word(back));
      const Element e = hom.source.evaluate_word(w);
      if (e == f.identity()) continue;
      data.basis.push_back({v, j, std::move(w), e, word_of_free_element(hom.source, e)});
    }
  }
  return data;
}

MarkedGroup kernel_marking(const FiniteHom& hom, const SchreierData& data) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < data.basis.size(); ++i)
    gens.push_back({"y" + std::to_string(i), data.basis[i].reduced});
  return MarkedGroup::from_generators(hom.source.group(), std::move(gens));
}

SchreierReport verify_schreier_index_bound(const FiniteHom& hom,
                                           std::optional<std::uint32_t> radius) {
  SchreierReport report;
  report.data = build_schreier(hom);
  const auto& d = report.data;
  const auto n = static_cast<std::int64_t>(d.source_rank);
  report.lhs = Rational(1) - Rational(static_cast<std::int64_t>(d.basis.size()));
  report.rhs = schreier_upper(Rational(1 - n), static_cast<std::int64_t>(d.index()));
  report.equal = report.lhs == report.rhs;

  report.checks.push_back({"basis-size", d.basis.size() == d.expected_basis_size(),
                           std::to_string(d.basis.size()) + " == " +
                               std::to_string(d.expected_basis_size())});

  bool in_kernel = true;
  for (const auto& b : d.basis)
    in_kernel &= image_of(hom, b.reduced_word) == hom.target->identity();
  report.checks.push_back({"basis-in-kernel", in_kernel, "every basis element maps to 1"});

  bool tree_ok = true;
  for (const auto& c : d.cosets) tree_ok &= image_of(hom, c.transversal) == c.representative;
  report.checks.push_back({"transversal-images", tree_ok,
                           "every transversal word maps to its coset"});

  // Schreier condition: dropping the last letter of a transversal word gives
  // another transversal word.
  bool prefix_closed = true;
  for (const auto& e : d.tree) {
    Word w = d.cosets[e.child].transversal;
    w.pop_back();
    const auto& parent = d.cosets[e.parent].transversal;
    prefix_closed &= w.size() == parent.size() &&
                     std::equal(w.begin(), w.end(), parent.begin(), [](const Letter& a, const Letter& b) {
                       return a.symbol == b.symbol && a.exponent == b.exponent;
                     });
  }
  report.checks.push_back({"prefix-closed", prefix_closed, "transversal is prefix-closed"});
  report.checks.push_back({"index-equality", report.equal,
                           to_string(report.lhs) + " == " + to_string(report.rhs)});

  if (radius) {
    report.kernel_bounds = xi_hat_lower_bounds(kernel_marking(hom, d), *radius);
    bool rows_ok = true;
    for (const auto& row : report.kernel_bounds) rows_ok &= row.xi_hat_lower == report.lhs;
    report.checks.push_back({"kernel-balls", rows_ok,
                             "lower bounds on kernel balls equal " + to_string(report.lhs)});
  }
  return report;
}

}  // namespace cyclo
