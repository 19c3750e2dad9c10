#ifndef LIECOALG_LIE_EXPR_HPP
#define LIECOALG_LIE_EXPR_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liecoalg/generator.hpp"

namespace liecoalg {

/// A planar binary bracket expression: a leaf carrying a generator, or
/// `[left, right]`. Subtrees are shared and immutable.
class LieExpr {
 public:
  explicit LieExpr(const Generator& g) : node_(std::make_shared<const Node>(Node{g, {}, {}, 1, g.name()})) {}

  static LieExpr bracket(const LieExpr& left, const LieExpr& right) {
    std::string text = "[" + left.text() + "," + right.text() + "]";
    return LieExpr(std::make_shared<const Node>(
        Node{std::nullopt, left.node_, right.node_, left.weight() + right.weight(), std::move(text)}));
  }

  bool is_leaf() const noexcept { return node_->generator.has_value(); }
  const Generator& generator() const {
    if (!is_leaf()) throw Error("bracket expression has no generator");
    return *node_->generator;
  }
  LieExpr left() const {
    if (is_leaf()) throw Error("leaf has no left factor");
    return LieExpr(node_->left);
  }
  LieExpr right() const {
    if (is_leaf()) throw Error("leaf has no right factor");
    return LieExpr(node_->right);
  }

  /// Leaf count.
  std::size_t weight() const noexcept { return node_->weight; }
  const std::string& text() const noexcept { return node_->text; }
  std::string to_string() const { return node_->text; }

  /// Leaf labels in planar left-to-right order.
  std::vector<Generator> leaves() const {
    std::vector<Generator> out;
    collect(*node_, out);
    return out;
  }

  /// [a1,[a2,[...,[a_{n-1},a_n]]]]
  bool is_right_normed() const {
    const Node* n = node_.get();
    while (!n->generator) {
      if (!n->left->generator) return false;
      n = n->right.get();
    }
    return true;
  }

  friend bool operator==(const LieExpr& a, const LieExpr& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend std::strong_ordering operator<=>(const LieExpr& a, const LieExpr& b) {
    return a.node_->text.compare(b.node_->text) <=> 0;
  }

 private:
  struct Node {
    std::optional<Generator> generator;
    std::shared_ptr<const Node> left, right;
    std::size_t weight;
    std::string text;
  };

  explicit LieExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static void collect(const Node& n, std::vector<Generator>& out) {
    if (n.generator) {
      out.push_back(*n.generator);
      return;
    }
    collect(*n.left, out);
    collect(*n.right, out);
  }

  std::shared_ptr<const Node> node_;
};

inline LieExpr bracket(const LieExpr& x, const LieExpr& y) { return LieExpr::bracket(x, y); }

inline Multidegree multidegree(const LieExpr& l) { return Multidegree::of_labels(l.leaves()); }
inline std::size_t weight(const LieExpr& l) { return l.weight(); }
inline const std::string& shape_key(const LieExpr& l) { return l.text(); }

/// [[...[x1,x2],...],xn]
inline LieExpr left_normed(const std::vector<Generator>& letters) {
  if (letters.empty()) throw Error("bracket monomial needs at least one letter");
  LieExpr e(letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) e = bracket(e, LieExpr(letters[i]));
  return e;
}

/// [x1,[x2,[...,[x_{n-1},xn]]]]
inline LieExpr right_normed(const std::vector<Generator>& letters) {
  if (letters.empty()) throw Error("bracket monomial needs at least one letter");
  LieExpr e(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) e = bracket(LieExpr(letters[i]), e);
  return e;
}

}  // namespace liecoalg

#endif  // LIECOALG_LIE_EXPR_HPP
