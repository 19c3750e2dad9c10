#ifndef LIECOALG_BASIS_HPP
#define LIECOALG_BASIS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "liecoalg/lie_expr.hpp"
#include "liecoalg/oriented_graph.hpp"
#include "liecoalg/rooted_tree.hpp"
#include "liecoalg/word.hpp"

namespace liecoalg {

namespace detail {

/// Edge lists (as unordered pairs) of every labeled tree on n vertices, via
/// Prüfer sequences.
inline std::vector<std::vector<Edge>> labeled_trees(int n) {
  std::vector<std::vector<Edge>> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  if (n == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
      if (degree[i] == 1) (u < 0 ? u : v) = i;
    }
    edges.emplace_back(u, v);
    out.push_back(std::move(edges));

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

inline std::vector<int> parents_from_root(int n, const std::vector<Edge>& edges, int root) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, -2);
  parent[root] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return parent;
}

}  // namespace detail

/// Every word with the given content, in lexicographic order.
inline std::vector<Word> words_of(const Multidegree& d) {
  std::vector<Generator> letters = d.labels();
  std::vector<Word> out;
  if (letters.empty()) return out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// Every rooted tree with the given label content, in key order.
inline std::vector<RootedTree> rooted_trees_of(const Multidegree& d) {
  std::vector<Generator> labels = d.labels();
  const int n = static_cast<int>(labels.size());
  std::set<RootedTree> found;
  if (n == 0) return {};
  for (const auto& edges : detail::labeled_trees(n)) {
    for (int root = 0; root < n; ++root) {
      found.insert(tree_from_parents(labels, detail::parents_from_root(n, edges, root)));
    }
  }
  return {found.begin(), found.end()};
}

/// Every oriented tree with the given label content, in key order.
inline std::vector<OrientedGraph> graphs_of(const Multidegree& d) {
  std::vector<Generator> labels = d.labels();
  const int n = static_cast<int>(labels.size());
  std::set<OrientedGraph> found;
  if (n == 0) return {};
  for (const auto& edges : detail::labeled_trees(n)) {
    const unsigned masks = 1u << edges.size();
    for (unsigned mask = 0; mask < masks; ++mask) {
      std::vector<Edge> oriented = edges;
      for (std::size_t e = 0; e < oriented.size(); ++e) {
        if (mask & (1u << e)) std::swap(oriented[e].first, oriented[e].second);
      }
      found.insert(OrientedGraph(labels, std::move(oriented)));
    }
  }
  return {found.begin(), found.end()};
}

template <class Basis>
std::vector<Basis> basis_of(const Multidegree& d);
template <>
inline std::vector<Word> basis_of<Word>(const Multidegree& d) { return words_of(d); }
template <>
inline std::vector<RootedTree> basis_of<RootedTree>(const Multidegree& d) { return rooted_trees_of(d); }
template <>
inline std::vector<OrientedGraph> basis_of<OrientedGraph>(const Multidegree& d) { return graphs_of(d); }

/// All multidegrees of exactly the given weight over an alphabet (zero
/// counts allowed, so sub-alphabets are included).
inline std::vector<Multidegree> multidegrees_of_weight(const std::vector<Generator>& alphabet, int w) {
  std::vector<Multidegree> out;
  std::vector<int> counts(alphabet.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == alphabet.size()) {
      counts[i] = left;
      Multidegree d;
      for (std::size_t k = 0; k < alphabet.size(); ++k) d.add(alphabet[k], counts[k]);
      out.push_back(d);
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (!alphabet.empty() && w > 0) rec(rec, 0, w);
  return out;
}

}  // namespace liecoalg

#endif  // LIECOALG_BASIS_HPP
