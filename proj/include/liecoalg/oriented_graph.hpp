#ifndef LIECOALG_ORIENTED_GRAPH_HPP
#define LIECOALG_ORIENTED_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "liecoalg/generator.hpp"

namespace liecoalg {

using Edge = std::pair<int, int>;  // (source, target)

/// A connected, vertex-labeled directed graph whose underlying undirected
/// graph is a tree. Always held in canonical form: two isomorphic labeled
/// digraphs produce identical vertex order, edge list and key.
///
/// Canonical form: root the underlying tree at a center (the one giving the
/// smaller encoding when there are two), encode each vertex as
/// `label[...]` with its branches prefixed by `>` (edge away from it) or `<`
/// (edge into it) in sorted order, and number vertices in preorder of that
/// encoding.
class OrientedGraph {
 public:
  OrientedGraph(std::vector<Generator> labels, std::vector<Edge> edges) {
    validate(labels, edges);
    canonicalize(std::move(labels), edges);
  }

  explicit OrientedGraph(const Generator& g) : OrientedGraph(std::vector<Generator>{g}, {}) {}

  const std::vector<Generator>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& key() const noexcept { return key_; }

  /// `v1=a,v2=b; v1->v2`, vertices numbered from 1 in canonical order.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i > 0) s += ',';
      s += "v" + std::to_string(i + 1) + "=" + labels_[i].name();
    }
    s += ';';
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      s += (i == 0) ? " " : ",";
      s += "v" + std::to_string(edges_[i].first + 1) + "->v" + std::to_string(edges_[i].second + 1);
    }
    return s;
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const OrientedGraph& a, const OrientedGraph& b) {
    return a.key_.compare(b.key_) <=> 0;
  }

 private:
  static void validate(const std::vector<Generator>& labels, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw Error("a graph must have at least one vertex");
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    for (const auto& [s, t] : edges) {
      if (s < 0 || t < 0 || s >= n || t >= n) throw Error("edge endpoint out of range");
      if (s == t) throw Error("graph has a self-loop");
      int a = find(s), b = find(t);
      if (a == b) throw Error("graph contains an undirected cycle (must be an oriented tree)");
      comp[a] = b;
    }
    if (static_cast<int>(edges.size()) != n - 1) throw Error("graph is not connected");
  }

  struct Arc {
    int to;
    bool outgoing;
  };

  static std::string encode(const std::vector<std::vector<Arc>>& adj,
                            const std::vector<Generator>& labels, int v, int parent) {
    std::vector<std::string> parts;
    for (const Arc& a : adj[v]) {
      if (a.to == parent) continue;
      parts.push_back((a.outgoing ? ">" : "<") + encode(adj, labels, a.to, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = labels[v].name();
    s += '[';
    for (const auto& p : parts) s += p;
    s += ']';
    return s;
  }

  void canonicalize(std::vector<Generator> labels, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<Arc>> adj(n);
    for (const auto& [s, t] : edges) {
      adj[s].push_back({t, true});
      adj[t].push_back({s, false});
    }

    // Centers: peel leaves until at most two vertices remain.
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int v : layer) {
        for (const Arc& a : adj[v]) {
          if (--degree[a.to] == 1) next.push_back(a.to);
        }
      }
      layer = std::move(next);
    }

    int root = layer.front();
    std::string best = encode(adj, labels, root, -1);
    for (std::size_t i = 1; i < layer.size(); ++i) {
      std::string e = encode(adj, labels, layer[i], -1);
      if (e < best) {
        best = std::move(e);
        root = layer[i];
      }
    }

    // Preorder numbering following the sorted branch encodings.
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> new_id(n, -1);
    auto visit = [&](auto&& self, int v, int parent) -> void {
      new_id[v] = static_cast<int>(order.size());
      order.push_back(v);
      std::vector<std::pair<std::string, int>> branches;
      for (const Arc& a : adj[v]) {
        if (a.to == parent) continue;
        branches.emplace_back((a.outgoing ? ">" : "<") + encode(adj, labels, a.to, v), a.to);
      }
      std::sort(branches.begin(), branches.end());
      for (const auto& b : branches) self(self, b.second, v);
    };
    visit(visit, root, -1);

    labels_.clear();
    labels_.reserve(n);
    for (int v : order) labels_.push_back(labels[v]);
    edges_.clear();
    for (const auto& [s, t] : edges) edges_.emplace_back(new_id[s], new_id[t]);
    std::sort(edges_.begin(), edges_.end());
    key_ = std::move(best);
  }

  std::vector<Generator> labels_;
  std::vector<Edge> edges_;
  std::string key_;
};

/// The stored form is already canonical; rebuilding from raw data is the
/// canonicalization entry point.
inline OrientedGraph canonicalize_graph(std::vector<Generator> labels, std::vector<Edge> edges) {
  return OrientedGraph(std::move(labels), std::move(edges));
}
inline OrientedGraph canonicalize_graph(const OrientedGraph& g) {
  return OrientedGraph(g.labels(), g.edges());
}

inline Multidegree multidegree(const OrientedGraph& g) { return Multidegree::of_labels(g.labels()); }
inline std::size_t weight(const OrientedGraph& g) { return g.size(); }
inline const std::string& shape_key(const OrientedGraph& g) { return g.key(); }

}  // namespace liecoalg

#endif  // LIECOALG_ORIENTED_GRAPH_HPP
