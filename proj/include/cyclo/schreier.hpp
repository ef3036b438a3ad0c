#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/group.hpp"
#include "cyclo/optimizer.hpp"
#include "cyclo/oracles.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

/// A map from a free group with its standard marking onto a finite group,
/// given by the images of the marking symbols.
struct FiniteHom {
  MarkedGroup source;
  GroupHandle target;
  std::vector<Element> images;
};

/// Checks the source is free and default-marked, the target finite, and that
/// the images lie in the target and generate it.
FiniteHom make_finite_hom(MarkedGroup source, GroupHandle target,
                          std::vector<Element> images);

struct Coset {
  Element representative;  // target element
  Word transversal;        // BFS-shortest source word mapping to it
};

struct TreeEdge {
  std::uint32_t parent = 0;
  std::uint32_t child = 0;
  std::size_t symbol = 0;
  int exponent = 1;
};

/// y = T(v)·x·T(vx)⁻¹ for the coset v and marking symbol x.
struct BasisElement {
  std::uint32_t coset = 0;
  std::size_t symbol = 0;
  Word word;        // unreduced product of the three pieces
  Element reduced;  // as an element of the source
  Word reduced_word;
};

struct SchreierData {
  std::vector<Coset> cosets;  // BFS order, identity first
  std::vector<TreeEdge> tree;
  std::vector<BasisElement> basis;
  std::size_t source_rank = 0;

  std::uint64_t index() const { return cosets.size(); }
  std::size_t expected_basis_size() const { return 1 + cosets.size() * (source_rank - 1); }
};

SchreierData build_schreier(const FiniteHom& hom);

/// The kernel marked by its Schreier basis.
MarkedGroup kernel_marking(const FiniteHom& hom, const SchreierData& data);

struct SchreierReport {
  SchreierData data;
  Rational lhs;  // Ξ̂ of the kernel: 1 − basis size
  Rational rhs;  // index · Ξ̂ of the source
  bool equal = false;
  std::vector<Check> checks;
  std::vector<BoundRow> kernel_bounds;  // numeric rows when a radius is given
};

/// Compares Ξ̂ of the kernel with index·Ξ̂ of the free source, which agree
/// exactly. With `radius`, also computes lower bounds on the kernel's Cayley
/// balls, which must all equal the left side.
SchreierReport verify_schreier_index_bound(const FiniteHom& hom,
                                           std::optional<std::uint32_t> radius = std::nullopt);

}  // namespace cyclo
