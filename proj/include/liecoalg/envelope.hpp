#ifndef LIECOALG_ENVELOPE_HPP
#define LIECOALG_ENVELOPE_HPP

#include <unordered_map>
#include <vector>

#include "liecoalg/freealg.hpp"

namespace liecoalg {

/// Enveloping polynomial of a bracket expression on the given side: leaves
/// go to one-vertex shapes and brackets to commutators of the side's product.
template <ShapeBasis Basis>
LinearCombo<Basis> expand(const LieExpr& l) {
  if (l.is_leaf()) return LinearCombo<Basis>(unit_shape<Basis>(l.generator()));
  return bracket(expand<Basis>(l.left()), expand<Basis>(l.right()));
}

template <ShapeBasis Basis>
LinearCombo<Basis> expand(const LinearCombo<LieExpr>& l) {
  return extend_linearly<Basis>(l, [](const LieExpr& e) { return expand<Basis>(e); });
}

inline LinearCombo<Word> expand_assoc(const LieExpr& l) { return expand<Word>(l); }
inline LinearCombo<RootedTree> expand_prelie(const LieExpr& l) { return expand<RootedTree>(l); }
inline LinearCombo<OrientedGraph> expand_graph(const LieExpr& l) { return expand<OrientedGraph>(l); }

/// Memoizing expander for bulk work; subexpressions are cached by text.
template <ShapeBasis Basis>
class Expander {
 public:
  const LinearCombo<Basis>& operator()(const LieExpr& l) {
    auto it = cache_.find(l.text());
    if (it != cache_.end()) return it->second;
    LinearCombo<Basis> value = l.is_leaf() ? LinearCombo<Basis>(unit_shape<Basis>(l.generator()))
                                           : bracket((*this)(l.left()), (*this)(l.right()));
    return cache_.emplace(l.text(), std::move(value)).first->second;
  }

 private:
  std::unordered_map<std::string, LinearCombo<Basis>> cache_;
};

// ---------------------------------------------------------------------------
// Quotients q and their duals i

/// Ladder a1(a2(...(an))) goes to the word a1 a2 ... an; other trees to 0.
inline LinearCombo<Word> q_prelie(const RootedTree& t) {
  if (!t.is_ladder()) return {};
  std::vector<Generator> letters;
  const RootedTree* s = &t;
  while (true) {
    letters.push_back(s->label());
    if (s->children().empty()) break;
    s = &s->children().front();
  }
  return LinearCombo<Word>(Word(std::move(letters)));
}

/// Parent array of g if every edge points away from a single root vertex.
inline std::optional<std::vector<int>> rooted_parents(const OrientedGraph& g) {
  std::vector<int> parent(g.size(), -1);
  for (const auto& [s, t] : g.edges()) {
    if (parent[t] != -1) return std::nullopt;
    parent[t] = s;
  }
  // n-1 edges with in-degree <= 1 everywhere leave exactly one source.
  return parent;
}

/// Rooted graphs go to their underlying rooted tree; others to 0.
inline LinearCombo<RootedTree> q_graph(const OrientedGraph& g) {
  auto parent = rooted_parents(g);
  if (!parent) return {};
  return LinearCombo<RootedTree>(tree_from_parents(g.labels(), *parent));
}

inline LinearCombo<Word> q_prelie(const LinearCombo<RootedTree>& x) {
  return extend_linearly<Word>(x, [](const RootedTree& t) { return q_prelie(t); });
}
inline LinearCombo<RootedTree> q_graph(const LinearCombo<OrientedGraph>& x) {
  return extend_linearly<RootedTree>(x, [](const OrientedGraph& g) { return q_graph(g); });
}

/// w1 w2 ... wn goes to the ladder w1(w2(...(wn))).
inline RootedTree i_prelie(const Word& w) {
  RootedTree t(w.letters().back());
  for (std::size_t i = w.size() - 1; i-- > 0;) t = RootedTree(w[i], {t});
  return t;
}

/// Orients every edge of t away from its root.
inline OrientedGraph i_graph(const RootedTree& t) {
  FlatTree flat = flatten(t);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < flat.size(); ++v) edges.emplace_back(flat.parent[v], static_cast<int>(v));
  return OrientedGraph(flat.labels, std::move(edges));
}

inline LinearCombo<RootedTree> i_prelie(const LinearCombo<Word>& x) {
  return extend_linearly<RootedTree>(x, [](const Word& w) { return LinearCombo<RootedTree>(i_prelie(w)); });
}
inline LinearCombo<OrientedGraph> i_graph(const LinearCombo<RootedTree>& x) {
  return extend_linearly<OrientedGraph>(x, [](const RootedTree& t) { return LinearCombo<OrientedGraph>(i_graph(t)); });
}

}  // namespace liecoalg

#endif  // LIECOALG_ENVELOPE_HPP
