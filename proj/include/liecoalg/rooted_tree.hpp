#ifndef LIECOALG_ROOTED_TREE_HPP
#define LIECOALG_ROOTED_TREE_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "liecoalg/generator.hpp"

namespace liecoalg {

/// A vertex-labeled, rooted, non-planar tree. Children are kept sorted by
/// canonical key, so structurally equal trees compare equal.
///
/// The key is the recursive encoding `label(childkey,...,childkey)` with the
/// child keys in lexicographic order; a single vertex encodes as `label`.
class RootedTree {
 public:
  explicit RootedTree(Generator label, std::vector<RootedTree> children = {})
      : label_(std::move(label)), children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    weight_ = 1;
    key_ = label_.name();
    if (!children_.empty()) {
      key_ += '(';
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) key_ += ',';
        key_ += children_[i].key_;
        weight_ += children_[i].weight_;
      }
      key_ += ')';
    }
  }

  const Generator& label() const noexcept { return label_; }
  const std::vector<RootedTree>& children() const noexcept { return children_; }
  const std::string& key() const noexcept { return key_; }
  std::size_t weight() const noexcept { return weight_; }

  /// Ladder trees have at most one child per vertex.
  bool is_ladder() const {
    const RootedTree* t = this;
    while (!t->children_.empty()) {
      if (t->children_.size() > 1) return false;
      t = &t->children_.front();
    }
    return true;
  }

  std::string to_string() const { return key_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    return a.key_.compare(b.key_) <=> 0;
  }

 private:
  Generator label_;
  std::vector<RootedTree> children_;
  std::string key_;
  std::size_t weight_ = 1;
};

inline const std::string& canonical_key(const RootedTree& t) { return t.key(); }
inline const std::string& shape_key(const RootedTree& t) { return t.key(); }
inline std::size_t weight(const RootedTree& t) { return t.weight(); }

inline Multidegree multidegree(const RootedTree& t) {
  Multidegree d;
  std::function<void(const RootedTree&)> visit = [&](const RootedTree& s) {
    d.add(s.label(), 1);
    for (const RootedTree& c : s.children()) visit(c);
  };
  visit(t);
  return d;
}

/// Preorder flattening: vertex 0 is the root, `parent[v] < v` for v > 0.
struct FlatTree {
  std::vector<Generator> labels;
  std::vector<int> parent;

  std::size_t size() const noexcept { return labels.size(); }
};

inline FlatTree flatten(const RootedTree& t) {
  FlatTree out;
  std::function<void(const RootedTree&, int)> visit = [&](const RootedTree& s, int parent) {
    int id = static_cast<int>(out.labels.size());
    out.labels.push_back(s.label());
    out.parent.push_back(parent);
    for (const RootedTree& c : s.children()) visit(c, id);
  };
  visit(t, -1);
  return out;
}

/// Builds the canonical tree from an arbitrary parent array (exactly one
/// entry equal to -1).
inline RootedTree tree_from_parents(const std::vector<Generator>& labels,
                                    const std::vector<int>& parent) {
  const int n = static_cast<int>(labels.size());
  if (n == 0 || parent.size() != labels.size()) throw Error("malformed parent array");
  std::vector<std::vector<int>> kids(n);
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (parent[v] < 0) {
      if (root >= 0) throw Error("parent array has more than one root");
      root = v;
    } else {
      if (parent[v] >= n || parent[v] == v) throw Error("malformed parent array");
      kids[parent[v]].push_back(v);
    }
  }
  if (root < 0) throw Error("parent array has no root");
  int visited = 0;
  std::function<RootedTree(int, int)> build = [&](int v, int depth) {
    if (depth > n) throw Error("parent array contains a cycle");
    ++visited;
    std::vector<RootedTree> cs;
    cs.reserve(kids[v].size());
    for (int c : kids[v]) cs.push_back(build(c, depth + 1));
    return RootedTree(labels[v], std::move(cs));
  };
  RootedTree t = build(root, 0);
  if (visited != n) throw Error("parent array is not connected");
  return t;
}

}  // namespace liecoalg

#endif  // LIECOALG_ROOTED_TREE_HPP
