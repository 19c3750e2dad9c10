#ifndef LIECOALG_TERMS_HPP
#define LIECOALG_TERMS_HPP

// Basis shapes, multidegrees and exact linear combinations.

#include <type_traits>

#include "liecoalg/basis.hpp"
#include "liecoalg/combo.hpp"
#include "liecoalg/error.hpp"
#include "liecoalg/generator.hpp"
#include "liecoalg/lie_expr.hpp"
#include "liecoalg/oriented_graph.hpp"
#include "liecoalg/rooted_tree.hpp"
#include "liecoalg/scalar.hpp"
#include "liecoalg/word.hpp"

namespace liecoalg {

/// The three presentations of the Lie coalgebra.
enum class Side { assoc, prelie, graph };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::assoc: return "assoc";
    case Side::prelie: return "prelie";
    case Side::graph: return "graph";
  }
  return "?";
}

template <class Basis>
struct side_of;
template <>
struct side_of<Word> {
  static constexpr Side value = Side::assoc;
};
template <>
struct side_of<RootedTree> {
  static constexpr Side value = Side::prelie;
};
template <>
struct side_of<OrientedGraph> {
  static constexpr Side value = Side::graph;
};

template <class Basis>
concept ShapeBasis = std::is_same_v<Basis, Word> || std::is_same_v<Basis, RootedTree> ||
                     std::is_same_v<Basis, OrientedGraph>;

/// The single-vertex (or one-letter) shape.
template <ShapeBasis Basis>
Basis unit_shape(const Generator& g) {
  if constexpr (std::is_same_v<Basis, Word>) {
    return Word(g);
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    return RootedTree(g);
  } else {
    return OrientedGraph(g);
  }
}

}  // namespace liecoalg

#endif  // LIECOALG_TERMS_HPP
