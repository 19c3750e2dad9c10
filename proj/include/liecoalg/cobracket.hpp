#ifndef LIECOALG_COBRACKET_HPP
#define LIECOALG_COBRACKET_HPP

#include <utility>
#include <vector>

#include "liecoalg/terms.hpp"

namespace liecoalg {

/// Every split of w into a nonempty prefix and suffix.
inline std::vector<std::pair<Word, Word>> cuts(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  const auto& s = w.letters();
  for (std::size_t k = 1; k < s.size(); ++k) {
    out.emplace_back(Word({s.begin(), s.begin() + k}), Word({s.begin() + k, s.end()}));
  }
  return out;
}

/// One entry per edge: (tree containing the root, branch rooted at the
/// vertex that was on the far side of the edge).
inline std::vector<std::pair<RootedTree, RootedTree>> cuts(const RootedTree& t) {
  std::vector<std::pair<RootedTree, RootedTree>> out;
  const auto& kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<RootedTree> rest;
    rest.reserve(kids.size() - 1);
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (j != i) rest.push_back(kids[j]);
    }
    out.emplace_back(RootedTree(t.label(), std::move(rest)), kids[i]);
    for (auto& [root_side, branch] : cuts(kids[i])) {
      std::vector<RootedTree> replaced = kids;
      replaced[i] = std::move(root_side);
      out.emplace_back(RootedTree(t.label(), std::move(replaced)), std::move(branch));
    }
  }
  return out;
}

/// One entry per edge: (component containing the edge's source, component
/// containing its target). Every edge is a bridge, so both are graphs.
inline std::vector<std::pair<OrientedGraph, OrientedGraph>> cuts(const OrientedGraph& g) {
  std::vector<std::pair<OrientedGraph, OrientedGraph>> out;
  const int n = static_cast<int>(g.size());
  const auto& edges = g.edges();
  for (std::size_t cut = 0; cut < edges.size(); ++cut) {
    std::vector<int> side(n, -1);
    std::vector<int> stack{edges[cut].first};
    side[edges[cut].first] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (e == cut) continue;
        int w = -1;
        if (edges[e].first == v) w = edges[e].second;
        if (edges[e].second == v) w = edges[e].first;
        if (w >= 0 && side[w] < 0) {
          side[w] = 0;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> index(n);
    std::vector<Generator> labels[2];
    for (int v = 0; v < n; ++v) {
      int s = side[v] == 0 ? 0 : 1;
      index[v] = static_cast<int>(labels[s].size());
      labels[s].push_back(g.labels()[v]);
    }
    std::vector<Edge> parts[2];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == cut) continue;
      int s = side[edges[e].first] == 0 ? 0 : 1;
      parts[s].emplace_back(index[edges[e].first], index[edges[e].second]);
    }
    out.emplace_back(OrientedGraph(std::move(labels[0]), std::move(parts[0])),
                     OrientedGraph(std::move(labels[1]), std::move(parts[1])));
  }
  return out;
}

/// Anti-commutative cobracket: sum over cuts of x ⊗ y − y ⊗ x.
template <ShapeBasis Basis>
TensorCombo<Basis> cobracket(const LinearCombo<Basis>& dual) {
  TensorCombo<Basis> out;
  for (const auto& [shape, c] : dual) {
    for (auto& [x, y] : cuts(shape)) {
      out.add_term({x, y}, c);
      out.add_term({y, x}, -c);
    }
  }
  return out;
}

inline TensorCombo<Word> cobracket_assoc(const LinearCombo<Word>& psi) { return cobracket(psi); }
inline TensorCombo<RootedTree> cobracket_prelie(const LinearCombo<RootedTree>& phi) { return cobracket(phi); }
inline TensorCombo<OrientedGraph> cobracket_graph(const LinearCombo<OrientedGraph>& gamma) {
  return cobracket(gamma);
}

/// (f ⊗ f) applied to a tensor combination, for a basis map f.
template <class Out, class Basis, class F>
TensorCombo<Out> tensor_map(const TensorCombo<Basis>& t, F&& f) {
  TensorCombo<Out> out;
  for (const auto& [p, c] : t) out.add_term({f(p.first), f(p.second)}, c);
  return out;
}

}  // namespace liecoalg

#endif  // LIECOALG_COBRACKET_HPP
