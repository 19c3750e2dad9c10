#ifndef LIECOALG_PAIRING_HPP
#define LIECOALG_PAIRING_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "liecoalg/cobracket.hpp"
#include "liecoalg/envelope.hpp"

namespace liecoalg {

// ---------------------------------------------------------------------------
// Planar bracket trees: leaves, internal vertices, root(a, b)

/// Leaves are numbered 0..n-1 left to right; internal vertices 0..n-2 in
/// preorder, so 0 is the outermost bracket.
class LieTreeIndex {
 public:
  explicit LieTreeIndex(const LieExpr& l) : leaves_(l.leaves()) {
    const std::size_t n = leaves_.size();
    lca_.assign(n * n, -1);
    int next_leaf = 0, next_internal = 0;
    build(l, next_leaf, next_internal);
  }

  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  std::size_t internal_count() const noexcept { return leaves_.size() - 1; }
  const std::vector<Generator>& leaf_labels() const noexcept { return leaves_; }

  /// Internal vertex at the base of the smallest subtree holding both leaves.
  int root_of(int p, int q) const {
    if (p == q) throw Error("root_of needs two distinct leaves");
    return lca_[static_cast<std::size_t>(p) * leaves_.size() + q];
  }

  /// +1 iff the source leaf lies left of the target leaf.
  int sign_of(int source, int target) const {
    if (source == target) throw Error("sign_of needs two distinct leaves");
    return source < target ? 1 : -1;
  }

 private:
  std::vector<int> build(const LieExpr& l, int& next_leaf, int& next_internal) {
    if (l.is_leaf()) return {next_leaf++};
    const int id = next_internal++;
    std::vector<int> left = build(l.left(), next_leaf, next_internal);
    std::vector<int> right = build(l.right(), next_leaf, next_internal);
    const std::size_t n = leaves_.size();
    for (int p : left) {
      for (int q : right) {
        lca_[p * n + q] = id;
        lca_[q * n + p] = id;
      }
    }
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }

  std::vector<Generator> leaves_;
  std::vector<int> lca_;
};

// ---------------------------------------------------------------------------
// sigma-configuration pairing

/// Vertex labels plus directed edges (parent -> child for rooted trees,
/// source -> target for graphs).
struct ShapeEdges {
  std::vector<Generator> labels;
  std::vector<Edge> edges;
};

inline ShapeEdges shape_edges(const RootedTree& t) {
  FlatTree flat = flatten(t);
  ShapeEdges s{flat.labels, {}};
  for (std::size_t v = 1; v < flat.size(); ++v) s.edges.emplace_back(flat.parent[v], static_cast<int>(v));
  return s;
}
inline ShapeEdges shape_edges(const OrientedGraph& g) { return {g.labels(), g.edges()}; }

/// <|R|,|T|>_sigma for a vertex-to-leaf bijection `sigma`: the product of
/// edge signs when beta_sigma hits every internal vertex, 0 otherwise.
inline int sigma_term(const ShapeEdges& shape, const LieTreeIndex& tree, const std::vector<int>& sigma) {
  if (shape.labels.size() != tree.leaf_count()) return 0;
  if (shape.labels.size() == 1) return 1;
  std::vector<char> hit(tree.internal_count(), 0);
  int sign = 1;
  for (const auto& [s, t] : shape.edges) {
    const int node = tree.root_of(sigma[s], sigma[t]);
    if (hit[node]) return 0;  // n-1 edges onto n-1 vertices: not injective means not surjective
    hit[node] = 1;
    sign *= tree.sign_of(sigma[s], sigma[t]);
  }
  return sign;
}

/// Calls `visit(sigma)` for each label-preserving bijection from the shape's
/// vertices to the tree's leaves.
template <class Visit>
void for_each_label_preserving_bijection(const std::vector<Generator>& vertex_labels,
                                         const std::vector<Generator>& leaf_labels, Visit&& visit) {
  const std::size_t n = vertex_labels.size();
  if (leaf_labels.size() != n) return;
  std::vector<Generator> distinct = vertex_labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::vector<int>> vertices(distinct.size()), positions(distinct.size());
  auto group = [&](const Generator& g) {
    return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), g) - distinct.begin());
  };
  for (std::size_t v = 0; v < n; ++v) vertices[group(vertex_labels[v])].push_back(static_cast<int>(v));
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t k = group(leaf_labels[p]);
    if (k == distinct.size() || distinct[k] != leaf_labels[p]) return;
    positions[k].push_back(static_cast<int>(p));
  }
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    if (vertices[k].size() != positions[k].size()) return;
  }
  std::vector<int> sigma(n, -1);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == distinct.size()) {
      visit(static_cast<const std::vector<int>&>(sigma));
      return;
    }
    std::vector<int> perm = positions[k];
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) sigma[vertices[k][i]] = perm[i];
      self(self, k + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(rec, 0);
}

inline Integer pair_sigma_shape(const ShapeEdges& shape, const LieExpr& l) {
  LieTreeIndex tree(l);
  Integer total = 0;
  for_each_label_preserving_bijection(shape.labels, tree.leaf_labels(), [&](const std::vector<int>& sigma) {
    total += sigma_term(shape, tree, sigma);
  });
  return total;
}

inline Scalar pair_sigma(const RootedTree& r, const LieExpr& l) { return Scalar(pair_sigma_shape(shape_edges(r), l)); }
inline Scalar pair_sigma(const OrientedGraph& g, const LieExpr& l) { return Scalar(pair_sigma_shape(shape_edges(g), l)); }
/// Associative side through the ladder inclusion w -> i_prelie(w).
inline Scalar pair_sigma(const Word& w, const LieExpr& l) { return pair_sigma(i_prelie(w), l); }

template <ShapeBasis Basis>
Scalar pair_sigma(const LinearCombo<Basis>& dual, const LieExpr& l) {
  Scalar total = 0;
  for (const auto& [shape, c] : dual) total += c * pair_sigma(shape, l);
  return total;
}
template <ShapeBasis Basis>
Scalar pair_sigma(const LinearCombo<Basis>& dual, const LinearCombo<LieExpr>& l) {
  Scalar total = 0;
  for (const auto& [e, c] : l) total += c * pair_sigma(dual, e);
  return total;
}

/// One edge-split of <R, [T1, T2]>_sigma: for every edge, the term
/// <R1,T1>_s <R2,T2>_s - <R2,T1>_s <R1,T2>_s where R1 holds the edge's
/// source. Returns the per-edge values; their sum equals sigma_term and at
/// most one of them is nonzero.
inline std::vector<int> sigma_edge_split(const ShapeEdges& shape, const LieExpr& l, const std::vector<int>& sigma) {
  if (l.is_leaf()) throw Error("edge split needs a bracket");
  const LieExpr t1 = l.left(), t2 = l.right();
  const int split = static_cast<int>(t1.weight());
  const LieTreeIndex idx1(t1), idx2(t2);
  const int n = static_cast<int>(shape.labels.size());

  // <R', T'>_sigma for the component `part` of the cut shape against the
  // factor occupying leaves [offset, offset + size).
  auto restricted = [&](const std::vector<int>& part, std::size_t cut, const LieTreeIndex& idx, int offset) {
    if (part.size() != idx.leaf_count()) return 0;
    std::vector<int> local(n, -1);
    ShapeEdges sub;
    std::vector<int> sub_sigma;
    for (int v : part) {
      const int p = sigma[v] - offset;
      if (p < 0 || p >= static_cast<int>(idx.leaf_count())) return 0;
      local[v] = static_cast<int>(sub.labels.size());
      sub.labels.push_back(shape.labels[v]);
      sub_sigma.push_back(p);
    }
    for (std::size_t e = 0; e < shape.edges.size(); ++e) {
      if (e == cut) continue;
      const auto& [s, t] = shape.edges[e];
      if (local[s] >= 0 && local[t] >= 0) sub.edges.emplace_back(local[s], local[t]);
    }
    return sigma_term(sub, idx, sub_sigma);
  };

  std::vector<int> terms;
  for (std::size_t cut = 0; cut < shape.edges.size(); ++cut) {
    std::vector<int> side(n, 0);
    std::vector<int> stack{shape.edges[cut].first};
    side[shape.edges[cut].first] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < shape.edges.size(); ++e) {
        if (e == cut) continue;
        const auto& [s, t] = shape.edges[e];
        int w = s == v ? t : (t == v ? s : -1);
        if (w >= 0 && !side[w]) {
          side[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> source_part, target_part;
    for (int v = 0; v < n; ++v) (side[v] ? source_part : target_part).push_back(v);
    const int value = restricted(source_part, cut, idx1, 0) * restricted(target_part, cut, idx2, split) -
                      restricted(target_part, cut, idx1, 0) * restricted(source_part, cut, idx2, split);
    terms.push_back(value);
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Symmetry factors

/// Label-preserving vertex permutations that map the edge set onto itself.
inline Integer automorphism_count(const ShapeEdges& shape) {
  std::vector<Edge> edges = shape.edges;
  std::sort(edges.begin(), edges.end());
  Integer count = 0;
  std::vector<Edge> image(edges.size());
  for_each_label_preserving_bijection(shape.labels, shape.labels, [&](const std::vector<int>& p) {
    for (std::size_t e = 0; e < edges.size(); ++e) image[e] = {p[edges[e].first], p[edges[e].second]};
    std::sort(image.begin(), image.end());
    if (image == edges) ++count;
  });
  return count;
}

/// |Aut(s)|: the value of the dual basis element s* on s. Words have none
/// beyond the identity, and neither does any shape with distinct labels.
inline Integer symmetry_factor(const Word&) { return 1; }
inline Integer symmetry_factor(const RootedTree& t) { return automorphism_count(shape_edges(t)); }
inline Integer symmetry_factor(const OrientedGraph& g) { return automorphism_count(shape_edges(g)); }

// ---------------------------------------------------------------------------
// Pairing by expansion: <s*, l> = |Aut(s)| * (coefficient of s in p(l))

template <ShapeBasis Basis>
Scalar pair_expand(const LinearCombo<Basis>& dual, const LinearCombo<LieExpr>& l) {
  Scalar total = 0;
  for (const auto& [e, ce] : l) {
    const LinearCombo<Basis> image = expand<Basis>(e);
    for (const auto& [shape, c] : dual) {
      const Scalar coefficient = image.coefficient_of(shape);
      if (coefficient != 0) total += ce * c * Scalar(symmetry_factor(shape)) * coefficient;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Pairing by recursion on brackets through the cobracket

/// <phi, [x, y]> = sum_i <alpha_i, x> <beta_i, y> with ]phi[ = sum alpha_i ⊗ beta_i,
/// bottoming out at <b*, c> = delta(b, c) on single generators. Results and
/// cobrackets are memoized, so one instance can serve many queries.
template <ShapeBasis Basis>
class RecursivePairing {
 public:
  Scalar operator()(const Basis& shape, const LieExpr& l) {
    if (weight(shape) != l.weight()) return 0;
    if (l.is_leaf()) return (weight(shape) == 1 && multidegree(shape).count(l.generator()) == 1) ? 1 : 0;
    std::string key = shape_key(shape);
    key += '\x1f';
    key += l.text();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Scalar total = 0;
    if (multidegree(shape) == multidegree(l)) {
      const LieExpr x = l.left(), y = l.right();
      for (const auto& [factors, c] : cobracket_of(shape)) {
        if (weight(factors.first) != x.weight()) continue;
        Scalar left = (*this)(factors.first, x);
        if (left == 0) continue;
        total += c * left * (*this)(factors.second, y);
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  Scalar operator()(const LinearCombo<Basis>& dual, const LieExpr& l) {
    Scalar total = 0;
    for (const auto& [shape, c] : dual) total += c * (*this)(shape, l);
    return total;
  }

  Scalar operator()(const LinearCombo<Basis>& dual, const LinearCombo<LieExpr>& l) {
    Scalar total = 0;
    for (const auto& [e, c] : l) total += c * (*this)(dual, e);
    return total;
  }

 private:
  const TensorCombo<Basis>& cobracket_of(const Basis& shape) {
    const std::string& key = shape_key(shape);
    auto it = cobrackets_.find(key);
    if (it == cobrackets_.end()) it = cobrackets_.emplace(key, cobracket(LinearCombo<Basis>(shape))).first;
    return it->second;
  }

  std::unordered_map<std::string, Scalar> memo_;
  std::unordered_map<std::string, TensorCombo<Basis>> cobrackets_;
};

template <ShapeBasis Basis>
Scalar pair_recursive(const LinearCombo<Basis>& dual, const LinearCombo<LieExpr>& l) {
  RecursivePairing<Basis> engine;
  return engine(dual, l);
}

// ---------------------------------------------------------------------------
// Right-normed signed count

/// <w*, [a1,[a2,[...,[a_{n-1},a_n]]]]>: signed count of index sequences
/// that read the bracket forward through some positions and then the
/// skipped positions backward, i.e. a shuffle of (1..k-1) with (n..k+1)
/// followed by k, weighted by (-1)^(n-k).
inline Scalar pair_right_normed(const Word& w, const LieExpr& l) {
  if (!l.is_right_normed()) throw Error("expression is not right-normed: " + l.text());
  const std::vector<Generator> a = l.leaves();
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(w.size()) != n) return 0;
  Integer total = 0;
  std::vector<int> seq;
  for (int k = 1; k <= n; ++k) {
    int count = 0;
    // ascending 1..k-1 and descending n..k+1, interleaved
    auto rec = [&](auto&& self, int next_up, int next_down) -> void {
      const std::size_t pos = seq.size();
      if (next_up == k && next_down == k) {
        if (w[k - 1] == a[n - 1]) ++count;
        return;
      }
      if (next_up < k && w[next_up - 1] == a[pos]) {
        seq.push_back(next_up);
        self(self, next_up + 1, next_down);
        seq.pop_back();
      }
      if (next_down > k && w[next_down - 1] == a[pos]) {
        seq.push_back(next_down);
        self(self, next_up, next_down - 1);
        seq.pop_back();
      }
    };
    rec(rec, 1, n);
    total += ((n - k) % 2 == 0) ? count : -count;
  }
  return Scalar(total);
}

inline Scalar pair_right_normed(const LinearCombo<Word>& dual, const LinearCombo<LieExpr>& l) {
  Scalar total = 0;
  for (const auto& [e, ce] : l) {
    for (const auto& [w, c] : dual) total += ce * c * pair_right_normed(w, e);
  }
  return total;
}

}  // namespace liecoalg

#endif  // LIECOALG_PAIRING_HPP
