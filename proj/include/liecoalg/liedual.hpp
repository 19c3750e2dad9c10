#ifndef LIECOALG_LIEDUAL_HPP
#define LIECOALG_LIEDUAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "liecoalg/linalg.hpp"
#include "liecoalg/pairing.hpp"

namespace liecoalg {

// ---------------------------------------------------------------------------
// Spanning brackets

/// Left-normed monomials [[...[x1,x2],...],xn] over every distinct ordering
/// of the multidegree's letters.
struct SpanningBracketSet {
  Multidegree multidegree;
  std::vector<LieExpr> brackets;
};

inline SpanningBracketSet spanning_brackets(const Multidegree& d) {
  SpanningBracketSet out{d, {}};
  std::vector<Generator> letters = d.labels();
  if (letters.empty()) return out;
  do {
    out.brackets.push_back(left_normed(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// Left-normed monomials starting with `first`, then every ordering of the rest.
inline std::vector<LieExpr> left_normed_from(const Generator& first, std::vector<Generator> rest) {
  std::vector<LieExpr> out;
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<Generator> letters{first};
    letters.insert(letters.end(), rest.begin(), rest.end());
    out.push_back(left_normed(letters));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Kernel generators

namespace detail {

inline RootedTree ladder(std::initializer_list<Generator> labels) {
  return i_prelie(Word(std::vector<Generator>(labels)));
}

inline OrientedGraph graph_on(const std::vector<Generator>& labels, std::vector<Edge> edges) {
  return OrientedGraph(labels, std::move(edges));
}

}  // namespace detail

/// Local generators of ker(eta) on two labels (anti-symmetry, arrow
/// reversing, the shuffle a*b) or three labels (Arnold and its companions).
template <ShapeBasis Basis>
std::vector<LinearCombo<Basis>> kernel_generators(const std::vector<Generator>& labels) {
  if (labels.size() != 2 && labels.size() != 3) {
    throw Error("kernel generators take 2 or 3 labels, got " + std::to_string(labels.size()));
  }
  std::vector<LinearCombo<Basis>> out;
  const Generator& a = labels[0];
  const Generator& b = labels[1];
  if constexpr (std::is_same_v<Basis, Word>) {
    if (labels.size() == 2) {
      out.push_back(shuffle(Word(a), Word(b)));
    } else {
      const Generator& c = labels[2];
      out.push_back(shuffle(Word(a), Word(std::vector<Generator>{b, c})));
      out.push_back(shuffle(Word(std::vector<Generator>{a, b}), Word(c)));
    }
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    if (labels.size() == 2) {
      out.push_back(LinearCombo<RootedTree>{{RootedTree(a, {RootedTree(b)}), 1}, {RootedTree(b, {RootedTree(a)}), 1}});
    } else {
      const Generator& c = labels[2];
      using detail::ladder;
      out.push_back(LinearCombo<RootedTree>{{ladder({a, b, c}), 1}, {ladder({b, c, a}), 1}, {ladder({c, a, b}), 1}});
      out.push_back(LinearCombo<RootedTree>{{ladder({a, b, c}), 1}, {RootedTree(b, {RootedTree(a), RootedTree(c)}), 1}});
    }
  } else {
    using detail::graph_on;
    if (labels.size() == 2) {
      out.push_back(LinearCombo<OrientedGraph>{{graph_on({a, b}, {{0, 1}}), 1}, {graph_on({a, b}, {{1, 0}}), 1}});
    } else {
      const std::vector<Generator> abc{a, b, labels[2]};
      out.push_back(LinearCombo<OrientedGraph>{{graph_on(abc, {{0, 1}, {1, 2}}), 1},
                                               {graph_on(abc, {{1, 2}, {2, 0}}), 1},
                                               {graph_on(abc, {{0, 1}, {2, 0}}), 1}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grafting kernel elements

/// Attach t as a new child of the vertex carrying this label in every r_i.
struct GraftAtLabel {
  Generator label;
};
/// Attach every r_i as a new child of the vertex of t with this preorder index.
struct GraftOntoVertex {
  std::size_t vertex;
};
using GraftSpec = std::variant<GraftAtLabel, GraftOntoVertex>;

namespace detail {

inline bool is_simple(const RootedTree& t) { return multidegree(t).has_distinct_labels(); }

inline RootedTree attach_at_label(const RootedTree& r, const Generator& g, const RootedTree& t, bool& found) {
  std::vector<RootedTree> kids;
  kids.reserve(r.children().size() + 1);
  for (const RootedTree& k : r.children()) kids.push_back(attach_at_label(k, g, t, found));
  if (r.label() == g) {
    found = true;
    kids.push_back(t);
  }
  return RootedTree(r.label(), std::move(kids));
}

inline RootedTree attach_at_vertex(const FlatTree& flat, std::size_t v, const RootedTree& r) {
  std::vector<std::vector<int>> kids(flat.size());
  for (std::size_t u = 1; u < flat.size(); ++u) kids[flat.parent[u]].push_back(static_cast<int>(u));
  auto build = [&](auto&& self, int u) -> RootedTree {
    std::vector<RootedTree> cs;
    for (int k : kids[u]) cs.push_back(self(self, k));
    if (static_cast<std::size_t>(u) == v) cs.push_back(r);
    return RootedTree(flat.labels[u], std::move(cs));
  };
  return build(build, 0);
}

}  // namespace detail

/// Grafting closure of a kernel element sum c_i r_i* of simple trees:
/// either sum c_i (t grafted onto the same-labeled vertex of r_i) or
/// sum c_i (r_i grafted onto a fixed vertex of t).
inline LinearCombo<RootedTree> graft_kernel(const LinearCombo<RootedTree>& kernel, const RootedTree& t,
                                            const GraftSpec& spec) {
  LinearCombo<RootedTree> out;
  if (const auto* at = std::get_if<GraftAtLabel>(&spec)) {
    for (const auto& [r, c] : kernel) {
      if (!detail::is_simple(r)) throw Error("graft needs simple trees (distinct labels): " + r.to_string());
      bool found = false;
      RootedTree grafted = detail::attach_at_label(r, at->label, t, found);
      if (!found) throw Error("label " + at->label.name() + " missing from " + r.to_string());
      out.add_term(grafted, c);
    }
  } else {
    const auto& onto = std::get<GraftOntoVertex>(spec);
    const FlatTree flat = flatten(t);
    if (onto.vertex >= flat.size()) throw Error("vertex index out of range for " + t.to_string());
    const Generator* root_label = nullptr;
    for (const auto& [r, c] : kernel) {
      if (!detail::is_simple(r)) throw Error("graft needs simple trees (distinct labels): " + r.to_string());
      if (root_label && *root_label != r.label()) throw Error("graft onto a vertex needs roots with one label");
      root_label = &r.label();
      out.add_term(detail::attach_at_vertex(flat, onto.vertex, r), c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel membership and rank

/// True iff the dual pairs to zero with every spanning bracket of each of
/// its multidegree components, i.e. it lies in ker(eta).
template <ShapeBasis Basis>
bool kernel_member(const LinearCombo<Basis>& dual) {
  RecursivePairing<Basis> pair;
  for (const auto& [d, part] : split_by_multidegree(dual)) {
    for (const LieExpr& l : spanning_brackets(d).brackets) {
      if (pair(part, l) != 0) return false;
    }
  }
  return true;
}

/// Rank of the pairing matrix (basis duals of the multidegree against the
/// spanning brackets), computed column by column from the expansions.
template <ShapeBasis Basis>
std::size_t lie_dual_rank(const Multidegree& d) {
  SparseEchelon<Basis> echelon;
  Expander<Basis> expand_cached;
  for (const LieExpr& l : spanning_brackets(d).brackets) echelon.insert(to_vector(expand_cached(l)));
  return echelon.rank();
}

inline std::size_t lie_dual_rank(Side side, const Multidegree& d) {
  switch (side) {
    case Side::assoc: return lie_dual_rank<Word>(d);
    case Side::prelie: return lie_dual_rank<RootedTree>(d);
    case Side::graph: return lie_dual_rank<OrientedGraph>(d);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Long graphs

/// base -> w2 -> ... -> wn.
inline OrientedGraph long_graph(const std::vector<Generator>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  return OrientedGraph(path, std::move(edges));
}

/// Rewrites a graph dual with distinct labels as a combination of long
/// graphs starting at `base` that differs from it by a kernel element.
inline LinearCombo<OrientedGraph> long_graph_reduce(const LinearCombo<OrientedGraph>& gamma, const Generator& base) {
  LinearCombo<OrientedGraph> out;
  RecursivePairing<OrientedGraph> pair;
  for (const auto& [d, part] : split_by_multidegree(gamma)) {
    if (!d.has_distinct_labels()) throw Error("long-graph reduction needs distinct labels, got " + d.to_string());
    if (d.count(base) == 0) throw Error("base " + base.name() + " absent from " + d.to_string());
    std::vector<Generator> rest;
    for (const Generator& g : d.labels()) {
      if (g != base) rest.push_back(g);
    }
    for (const LieExpr& l : left_normed_from(base, rest)) {
      const Scalar c = pair(part, l);
      if (c != 0) out.add_term(long_graph(l.leaves()), c);
    }
  }
  return out;
}

}  // namespace liecoalg

#endif  // LIECOALG_LIEDUAL_HPP
