#ifndef LIECOALG_FREEALG_HPP
#define LIECOALG_FREEALG_HPP

#include <algorithm>
#include <vector>

#include "liecoalg/terms.hpp"

namespace liecoalg {

// ---------------------------------------------------------------------------
// Associative side

inline Word concat(const Word& u, const Word& v) {
  std::vector<Generator> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(letters));
}

/// Standard shuffle product: every interleaving of u and v, with
/// multiplicity, so the coefficients sum to C(|u|+|v|, |u|).
inline LinearCombo<Word> shuffle(const Word& u, const Word& v) {
  LinearCombo<Word> out;
  std::vector<Generator> buffer;
  buffer.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.add_term(Word(buffer), 1);
      return;
    }
    if (i < u.size()) {
      buffer.push_back(u[i]);
      self(self, i + 1, j);
      buffer.pop_back();
    }
    if (j < v.size()) {
      buffer.push_back(v[j]);
      self(self, i, j + 1);
      buffer.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// PreLie side

/// x with y's root attached as a new child of each vertex of x in turn.
inline std::vector<RootedTree> graft_at_each_vertex(const RootedTree& x, const RootedTree& y) {
  std::vector<RootedTree> out;
  std::vector<RootedTree> kids = x.children();
  kids.push_back(y);
  out.emplace_back(x.label(), std::move(kids));
  for (std::size_t i = 0; i < x.children().size(); ++i) {
    for (RootedTree& grafted : graft_at_each_vertex(x.children()[i], y)) {
      std::vector<RootedTree> replaced = x.children();
      replaced[i] = std::move(grafted);
      out.emplace_back(x.label(), std::move(replaced));
    }
  }
  return out;
}

inline LinearCombo<RootedTree> prelie_product(const RootedTree& x, const RootedTree& y) {
  LinearCombo<RootedTree> out;
  for (const RootedTree& t : graft_at_each_vertex(x, y)) out.add_term(t, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Graph side

/// Sum over every way of adding one edge from a vertex of g to a vertex of h.
inline LinearCombo<OrientedGraph> graph_product(const OrientedGraph& g, const OrientedGraph& h) {
  const int n = static_cast<int>(g.size());
  std::vector<Generator> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  std::vector<Edge> edges = g.edges();
  for (const auto& [s, t] : h.edges()) edges.emplace_back(s + n, t + n);
  LinearCombo<OrientedGraph> out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < static_cast<int>(h.size()); ++v) {
      std::vector<Edge> with = edges;
      with.emplace_back(u, n + v);
      out.add_term(OrientedGraph(labels, std::move(with)), 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bilinear extensions and brackets

inline LinearCombo<Word> basis_product(const Word& x, const Word& y) { return LinearCombo<Word>(concat(x, y)); }
inline LinearCombo<RootedTree> basis_product(const RootedTree& x, const RootedTree& y) {
  return prelie_product(x, y);
}
inline LinearCombo<OrientedGraph> basis_product(const OrientedGraph& x, const OrientedGraph& y) {
  return graph_product(x, y);
}

/// The side's product (concatenation, preLie grafting, graph product),
/// extended bilinearly.
template <ShapeBasis Basis>
LinearCombo<Basis> product(const LinearCombo<Basis>& x, const LinearCombo<Basis>& y) {
  LinearCombo<Basis> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Scalar c = ca * cb;
      for (const auto& [t, ct] : basis_product(a, b)) out.add_term(t, c * ct);
    }
  }
  return out;
}

inline LinearCombo<RootedTree> prelie_product(const LinearCombo<RootedTree>& x,
                                              const LinearCombo<RootedTree>& y) {
  return product(x, y);
}
inline LinearCombo<OrientedGraph> graph_product(const LinearCombo<OrientedGraph>& x,
                                                const LinearCombo<OrientedGraph>& y) {
  return product(x, y);
}

/// Commutator of the side's product.
template <ShapeBasis Basis>
LinearCombo<Basis> bracket(const LinearCombo<Basis>& x, const LinearCombo<Basis>& y) {
  return product(x, y) - product(y, x);
}

// ---------------------------------------------------------------------------
// Lyndon words

/// True iff w is strictly smaller than each of its nontrivial rotations.
inline bool is_lyndon(const Word& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Generator> rot(s.begin() + k, s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + k);
    if (!(s < rot)) return false;
  }
  return true;
}

/// All Lyndon words of length 1..max_len over the alphabet (sorted and
/// deduplicated first), in lexicographic order. Duval's generation.
inline std::vector<Word> lyndon_words(std::vector<Generator> alphabet, std::size_t max_len) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<Word> out;
  if (alphabet.empty() || max_len == 0) return out;
  const int k = static_cast<int>(alphabet.size());
  std::vector<int> w{0};
  while (true) {
    std::vector<Generator> letters;
    for (int i : w) letters.push_back(alphabet[i]);
    out.emplace_back(std::move(letters));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

}  // namespace liecoalg

#endif  // LIECOALG_FREEALG_HPP
