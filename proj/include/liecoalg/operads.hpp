#ifndef LIECOALG_OPERADS_HPP
#define LIECOALG_OPERADS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "liecoalg/liedual.hpp"

namespace liecoalg {

/// The four arity-graded spaces: permutations, bracket monomials, rooted
/// trees and oriented trees on the vertex set {1..n}.
enum class Family { assoc, lie, prelie, graph };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::assoc: return "assoc";
    case Family::lie: return "lie";
    case Family::prelie: return "prelie";
    case Family::graph: return "graph";
  }
  return "?";
}

template <class Shape>
struct family_of;
template <>
struct family_of<Word> {
  static constexpr Family value = Family::assoc;
};
template <>
struct family_of<LieExpr> {
  static constexpr Family value = Family::lie;
};
template <>
struct family_of<RootedTree> {
  static constexpr Family value = Family::prelie;
};
template <>
struct family_of<OrientedGraph> {
  static constexpr Family value = Family::graph;
};

template <class Shape>
concept OperadShape = ShapeBasis<Shape> || std::is_same_v<Shape, LieExpr>;

inline constexpr int max_operad_arity = 9;

/// Slot j is carried by the generator x<j>.
inline Generator slot(int j) { return Generator("x" + std::to_string(j)); }

inline int slot_index(const Generator& g) {
  const std::string& s = g.name();
  if (s.size() == 2 && s[0] == 'x' && s[1] >= '1' && s[1] <= '9') return s[1] - '0';
  throw Error("operad labels are x1..x9, got " + s);
}

// ---------------------------------------------------------------------------
// Relabeling

template <class F>
Word relabel(const Word& w, F&& f) {
  std::vector<Generator> letters;
  for (const Generator& g : w.letters()) letters.push_back(f(g));
  return Word(std::move(letters));
}
template <class F>
LieExpr relabel(const LieExpr& l, F&& f) {
  if (l.is_leaf()) return LieExpr(f(l.generator()));
  return bracket(relabel(l.left(), f), relabel(l.right(), f));
}
template <class F>
RootedTree relabel(const RootedTree& t, F&& f) {
  std::vector<RootedTree> kids;
  for (const RootedTree& k : t.children()) kids.push_back(relabel(k, f));
  return RootedTree(f(t.label()), std::move(kids));
}
template <class F>
OrientedGraph relabel(const OrientedGraph& g, F&& f) {
  std::vector<Generator> labels;
  for (const Generator& x : g.labels()) labels.push_back(f(x));
  return OrientedGraph(std::move(labels), g.edges());
}

namespace detail {

inline std::vector<Generator> labels_of(const Word& w) { return w.letters(); }
inline std::vector<Generator> labels_of(const LieExpr& l) { return l.leaves(); }
inline std::vector<Generator> labels_of(const RootedTree& t) { return flatten(t).labels; }
inline std::vector<Generator> labels_of(const OrientedGraph& g) { return g.labels(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Elements

/// A combination of shapes whose labels are exactly x1..xn, each once.
template <OperadShape Shape>
class OperadElement {
 public:
  OperadElement(int arity, LinearCombo<Shape> value) : arity_(arity), value_(std::move(value)) {
    if (arity < 1 || arity > max_operad_arity) throw Error("arity must be in 1..9, got " + std::to_string(arity));
    for (const auto& [shape, c] : value_) {
      std::vector<int> seen;
      for (const Generator& g : detail::labels_of(shape)) seen.push_back(slot_index(g));
      std::sort(seen.begin(), seen.end());
      std::vector<int> expected(arity);
      std::iota(expected.begin(), expected.end(), 1);
      if (seen != expected) {
        throw Error("operad element of arity " + std::to_string(arity) + " must use x1..x" + std::to_string(arity) +
                    " once each");
      }
    }
  }

  static OperadElement identity() { return OperadElement(1, LinearCombo<Shape>(unit(slot(1)))); }

  int arity() const noexcept { return arity_; }
  const LinearCombo<Shape>& value() const noexcept { return value_; }

  friend bool operator==(const OperadElement&, const OperadElement&) = default;

 private:
  static Shape unit(const Generator& g) {
    if constexpr (std::is_same_v<Shape, LieExpr>) {
      return LieExpr(g);
    } else {
      return unit_shape<Shape>(g);
    }
  }

  int arity_;
  LinearCombo<Shape> value_;
};

/// Sigma_n action: x_j goes to x_{perm[j-1]}.
template <OperadShape Shape>
OperadElement<Shape> act(const std::vector<int>& perm, const OperadElement<Shape>& x) {
  if (static_cast<int>(perm.size()) != x.arity()) throw Error("permutation size differs from arity");
  auto f = [&](const Generator& g) { return slot(perm[slot_index(g) - 1]); };
  LinearCombo<Shape> out;
  for (const auto& [s, c] : x.value()) out.add_term(relabel(s, f), c);
  return OperadElement<Shape>(x.arity(), std::move(out));
}

// ---------------------------------------------------------------------------
// Partial composition

namespace detail {

struct Shift {
  int i, m;
  Generator outer(const Generator& g) const {
    int j = slot_index(g);
    return slot(j < i ? j : j + m - 1);
  }
  Generator inner(const Generator& g) const { return slot(slot_index(g) + i - 1); }
};

inline LinearCombo<Word> compose_shapes(const Word& x, int i, const Word& y, const Shift& s) {
  std::vector<Generator> letters;
  for (const Generator& g : x.letters()) {
    if (slot_index(g) == i) {
      for (const Generator& h : y.letters()) letters.push_back(s.inner(h));
    } else {
      letters.push_back(s.outer(g));
    }
  }
  return LinearCombo<Word>(Word(std::move(letters)));
}

inline LieExpr substitute(const LieExpr& x, int i, const LieExpr& y, const Shift& s) {
  if (x.is_leaf()) return slot_index(x.generator()) == i ? y : LieExpr(s.outer(x.generator()));
  return bracket(substitute(x.left(), i, y, s), substitute(x.right(), i, y, s));
}

inline LinearCombo<LieExpr> compose_shapes(const LieExpr& x, int i, const LieExpr& y, const Shift& s) {
  return LinearCombo<LieExpr>(substitute(x, i, relabel(y, [&](const Generator& g) { return s.inner(g); }), s));
}

/// Calls visit(choice) for every choice vector in {0..base-1}^length.
template <class Visit>
void for_each_choice(std::size_t length, int base, Visit&& visit) {
  std::vector<int> choice(length, 0);
  while (true) {
    visit(static_cast<const std::vector<int>&>(choice));
    std::size_t k = 0;
    while (k < length && ++choice[k] == base) choice[k++] = 0;
    if (k == length) return;
  }
}

inline LinearCombo<RootedTree> compose_shapes(const RootedTree& x, int i, const RootedTree& y, const Shift& s) {
  const FlatTree fx = flatten(x), fy = flatten(y);
  const int n = static_cast<int>(fx.size()), m = static_cast<int>(fy.size());
  int vi = -1;
  for (int v = 0; v < n; ++v) {
    if (slot_index(fx.labels[v]) == i) vi = v;
  }
  // x's vertices keep indices (vi unused), y's vertices follow at n..n+m-1.
  std::vector<Generator> labels(n + m, fy.labels[0]);
  std::vector<int> parent(n + m, -1);
  std::vector<int> orphans;
  for (int v = 0; v < n; ++v) {
    labels[v] = v == vi ? slot(i) : s.outer(fx.labels[v]);
    parent[v] = fx.parent[v];
    if (parent[v] == vi) orphans.push_back(v);
  }
  for (int u = 0; u < m; ++u) {
    labels[n + u] = s.inner(fy.labels[u]);
    parent[n + u] = u == 0 ? fx.parent[vi] : n + fy.parent[u];
  }
  LinearCombo<RootedTree> out;
  for_each_choice(orphans.size(), m, [&](const std::vector<int>& choice) {
    std::vector<int> p = parent;
    for (std::size_t k = 0; k < orphans.size(); ++k) p[orphans[k]] = n + choice[k];
    // drop vertex vi and renumber
    std::vector<int> index(n + m, -1);
    std::vector<Generator> ls;
    for (int v = 0; v < n + m; ++v) {
      if (v == vi) continue;
      index[v] = static_cast<int>(ls.size());
      ls.push_back(labels[v]);
    }
    std::vector<int> ps;
    for (int v = 0; v < n + m; ++v) {
      if (v != vi) ps.push_back(p[v] < 0 ? -1 : index[p[v]]);
    }
    out.add_term(tree_from_parents(ls, ps), 1);
  });
  return out;
}

inline LinearCombo<OrientedGraph> compose_shapes(const OrientedGraph& x, int i, const OrientedGraph& y,
                                                 const Shift& s) {
  const int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  int vi = -1;
  for (int v = 0; v < n; ++v) {
    if (slot_index(x.labels()[v]) == i) vi = v;
  }
  std::vector<int> index(n, -1);
  std::vector<Generator> labels;
  for (int v = 0; v < n; ++v) {
    if (v == vi) continue;
    index[v] = static_cast<int>(labels.size());
    labels.push_back(s.outer(x.labels()[v]));
  }
  const int base = static_cast<int>(labels.size());
  for (const Generator& g : y.labels()) labels.push_back(s.inner(g));
  std::vector<Edge> fixed;
  for (const auto& [a, b] : y.edges()) fixed.emplace_back(base + a, base + b);
  std::vector<Edge> incident;
  for (const auto& [a, b] : x.edges()) {
    if (a != vi && b != vi) {
      fixed.emplace_back(index[a], index[b]);
    } else {
      incident.emplace_back(a, b);
    }
  }
  LinearCombo<OrientedGraph> out;
  for_each_choice(incident.size(), m, [&](const std::vector<int>& choice) {
    std::vector<Edge> edges = fixed;
    for (std::size_t k = 0; k < incident.size(); ++k) {
      const auto& [a, b] = incident[k];
      const int w = base + choice[k];
      edges.emplace_back(a == vi ? w : index[a], b == vi ? w : index[b]);
    }
    out.add_term(OrientedGraph(labels, std::move(edges)), 1);
  });
  return out;
}

}  // namespace detail

/// x ∘_i y: y's labels shift to i..i+m-1, x's labels above i shift up by m-1.
template <OperadShape Shape>
OperadElement<Shape> compose(const OperadElement<Shape>& x, int i, const OperadElement<Shape>& y) {
  if (i < 1 || i > x.arity()) {
    throw Error("composition slot " + std::to_string(i) + " outside 1.." + std::to_string(x.arity()));
  }
  const int arity = x.arity() + y.arity() - 1;
  if (arity > max_operad_arity) throw Error("composite arity exceeds 9");
  const detail::Shift s{i, y.arity()};
  LinearCombo<Shape> out;
  for (const auto& [a, ca] : x.value()) {
    for (const auto& [b, cb] : y.value()) {
      for (const auto& [t, ct] : detail::compose_shapes(a, i, b, s)) out.add_term(t, ca * cb * ct);
    }
  }
  return OperadElement<Shape>(arity, std::move(out));
}

// ---------------------------------------------------------------------------
// Operad maps

inline OperadElement<Word> Q_prelie(const OperadElement<RootedTree>& x) {
  return OperadElement<Word>(x.arity(), q_prelie(x.value()));
}
inline OperadElement<RootedTree> Q_graph(const OperadElement<OrientedGraph>& x) {
  return OperadElement<RootedTree>(x.arity(), q_graph(x.value()));
}
inline OperadElement<Word> U_assoc(const OperadElement<LieExpr>& x) {
  return OperadElement<Word>(x.arity(), expand<Word>(x.value()));
}
inline OperadElement<RootedTree> U_prelie(const OperadElement<LieExpr>& x) {
  return OperadElement<RootedTree>(x.arity(), expand<RootedTree>(x.value()));
}
inline OperadElement<OrientedGraph> U_graph(const OperadElement<LieExpr>& x) {
  return OperadElement<OrientedGraph>(x.arity(), expand<OrientedGraph>(x.value()));
}

/// Equality in the operad; bracket monomials are compared through U_assoc,
/// which is injective.
template <OperadShape Shape>
bool equivalent(const OperadElement<Shape>& a, const OperadElement<Shape>& b) {
  if (a.arity() != b.arity()) return false;
  if constexpr (std::is_same_v<Shape, LieExpr>) {
    return U_assoc(a) == U_assoc(b);
  } else {
    return a == b;
  }
}

// ---------------------------------------------------------------------------
// Dimensions

inline constexpr int max_dims_arity = 6;
inline constexpr int max_binary_generated_arity = 5;

inline Multidegree slots_multidegree(int n) {
  Multidegree d;
  for (int j = 1; j <= n; ++j) d.add(slot(j), 1);
  return d;
}

/// Spanning shapes of arity n: the canonical basis, or for lie every
/// left-normed monomial.
template <OperadShape Shape>
std::vector<Shape> spanning_shapes(int n) {
  const Multidegree d = slots_multidegree(n);
  if constexpr (std::is_same_v<Shape, LieExpr>) {
    return spanning_brackets(d).brackets;
  } else {
    return basis_of<Shape>(d);
  }
}

namespace detail {

template <OperadShape Shape>
auto span_key(const LinearCombo<Shape>& x) {
  if constexpr (std::is_same_v<Shape, LieExpr>) {
    return to_vector(expand<Word>(x));
  } else {
    return to_vector(x);
  }
}

template <OperadShape Shape>
using span_key_t = std::conditional_t<std::is_same_v<Shape, LieExpr>, Word, Shape>;

inline void check_arity(int n, int bound) {
  if (n < 1 || n > bound) {
    throw Error("arity " + std::to_string(n) + " outside the supported range 1.." + std::to_string(bound));
  }
}

}  // namespace detail

template <OperadShape Shape>
std::size_t dims(int n) {
  detail::check_arity(n, max_dims_arity);
  if constexpr (std::is_same_v<Shape, LieExpr>) {
    SparseEchelon<Word> echelon;
    for (const LieExpr& l : spanning_shapes<LieExpr>(n)) echelon.insert(to_vector(expand<Word>(l)));
    return echelon.rank();
  } else {
    return spanning_shapes<Shape>(n).size();
  }
}

/// Dimension of the sub-Sigma_n-module of arity n spanned by iterated
/// compositions of arity-2 elements.
template <OperadShape Shape>
std::size_t binary_generated_dim(int n) {
  detail::check_arity(n, max_binary_generated_arity);
  using Element = OperadElement<Shape>;
  std::vector<std::vector<Element>> basis(n + 1);
  basis[1].push_back(Element::identity());
  if (n == 1) return 1;
  for (const Shape& s : spanning_shapes<Shape>(2)) basis[2].emplace_back(2, LinearCombo<Shape>(s));
  for (int k = 2; k <= n; ++k) {
    SparseEchelon<detail::span_key_t<Shape>> echelon;
    std::vector<Element> independent;
    auto offer = [&](const Element& e) {
      if (echelon.insert(detail::span_key(e.value()))) independent.push_back(e);
    };
    if (k == 2) {
      for (const Element& e : basis[2]) offer(e);
    } else {
      for (int a = 2; a < k; ++a) {
        const int b = k - a + 1;
        for (const Element& x : basis[a]) {
          for (const Element& y : basis[b]) {
            for (int i = 1; i <= a; ++i) offer(compose(x, i, y));
          }
        }
      }
    }
    // close under Sigma_k, generated by adjacent transpositions
    for (std::size_t next = 0; next < independent.size(); ++next) {
      for (int j = 1; j < k; ++j) {
        std::vector<int> swap(k);
        std::iota(swap.begin(), swap.end(), 1);
        std::swap(swap[j - 1], swap[j]);
        offer(act(swap, independent[next]));
      }
    }
    basis[k] = std::move(independent);
  }
  return basis[n].size();
}

inline std::size_t dims(Family f, int n) {
  switch (f) {
    case Family::assoc: return dims<Word>(n);
    case Family::lie: return dims<LieExpr>(n);
    case Family::prelie: return dims<RootedTree>(n);
    case Family::graph: return dims<OrientedGraph>(n);
  }
  return 0;
}

inline std::size_t binary_generated_dim(Family f, int n) {
  switch (f) {
    case Family::assoc: return binary_generated_dim<Word>(n);
    case Family::lie: return binary_generated_dim<LieExpr>(n);
    case Family::prelie: return binary_generated_dim<RootedTree>(n);
    case Family::graph: return binary_generated_dim<OrientedGraph>(n);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Axiom checks on random elements

namespace detail {

inline LieExpr random_bracket(std::vector<Generator> leaves, std::mt19937_64& rng) {
  std::shuffle(leaves.begin(), leaves.end(), rng);
  std::function<LieExpr(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> LieExpr {
    if (hi - lo == 1) return LieExpr(leaves[lo]);
    std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
    const std::size_t k = cut(rng);
    return bracket(build(lo, k), build(k, hi));
  };
  return build(0, leaves.size());
}

}  // namespace detail

/// A combination of one to three random shapes with coefficients in ±1..±3.
template <OperadShape Shape>
OperadElement<Shape> random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(1, 3), sign(0, 1);
  LinearCombo<Shape> value;
  const int count = terms(rng);
  std::vector<Shape> shapes;
  if constexpr (!std::is_same_v<Shape, LieExpr>) shapes = spanning_shapes<Shape>(n);
  for (int t = 0; t < count; ++t) {
    const Scalar c = coeff(rng) * (sign(rng) ? 1 : -1);
    if constexpr (std::is_same_v<Shape, LieExpr>) {
      value.add_term(detail::random_bracket(slots_multidegree(n).labels(), rng), c);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
      value.add_term(shapes[pick(rng)], c);
    }
  }
  return OperadElement<Shape>(n, std::move(value));
}

struct AxiomReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed() const noexcept { return failures == 0; }
};

/// Sequential and parallel composition laws on random elements of arity
/// at most 3.
template <OperadShape Shape>
AxiomReport check_axioms(std::mt19937_64& rng, int trials) {
  AxiomReport report;
  std::uniform_int_distribution<int> arity(1, 3);
  for (int t = 0; t < trials; ++t) {
    const auto x = random_element<Shape>(arity(rng), rng);
    const auto y = random_element<Shape>(arity(rng), rng);
    const auto z = random_element<Shape>(arity(rng), rng);
    const int a = x.arity(), b = y.arity();
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= b; ++j) {
        report.record(equivalent(compose(compose(x, i, y), i + j - 1, z), compose(x, i, compose(y, j, z))),
                      "sequential law at i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
      for (int j = i + 1; j <= a; ++j) {
        report.record(equivalent(compose(compose(x, i, y), j + b - 1, z), compose(compose(x, j, z), i, y)),
                      "parallel law at i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
  return report;
}

/// Q_prelie and Q_graph commute with every partial composition.
inline AxiomReport check_quotients_commute(std::mt19937_64& rng, int trials) {
  AxiomReport report;
  std::uniform_int_distribution<int> arity(1, 3);
  for (int t = 0; t < trials; ++t) {
    const auto x = random_element<RootedTree>(arity(rng), rng);
    const auto y = random_element<RootedTree>(arity(rng), rng);
    const auto g = random_element<OrientedGraph>(arity(rng), rng);
    const auto h = random_element<OrientedGraph>(arity(rng), rng);
    for (int i = 1; i <= x.arity(); ++i) {
      report.record(Q_prelie(compose(x, i, y)) == compose(Q_prelie(x), i, Q_prelie(y)), "Q_prelie at slot " + std::to_string(i));
    }
    for (int i = 1; i <= g.arity(); ++i) {
      report.record(Q_graph(compose(g, i, h)) == compose(Q_graph(g), i, Q_graph(h)), "Q_graph at slot " + std::to_string(i));
    }
  }
  return report;
}

/// Q_p U_p = U_A and Q_p Q_G U_G = U_A on every spanning monomial of arity <= max_arity.
inline AxiomReport check_envelope_factorization(int max_arity) {
  AxiomReport report;
  for (int n = 1; n <= max_arity; ++n) {
    for (const LieExpr& l : spanning_shapes<LieExpr>(n)) {
      const OperadElement<LieExpr> x(n, LinearCombo<LieExpr>(l));
      const auto ua = U_assoc(x);
      report.record(Q_prelie(U_prelie(x)) == ua, "Q_p U_p on " + l.text());
      report.record(Q_prelie(Q_graph(U_graph(x))) == ua, "Q_p Q_G U_G on " + l.text());
    }
  }
  return report;
}

}  // namespace liecoalg

#endif  // LIECOALG_OPERADS_HPP
