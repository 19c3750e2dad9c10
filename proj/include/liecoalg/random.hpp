#ifndef LIECOALG_RANDOM_HPP
#define LIECOALG_RANDOM_HPP

// Random shapes for property checks. All draws go through one engine so a
// fixed seed reproduces a run.

#include <algorithm>
#include <random>
#include <vector>

#include "liecoalg/terms.hpp"

namespace liecoalg::random {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<Generator> letters(Engine& rng, const std::vector<Generator>& alphabet, int n) {
  std::vector<Generator> out;
  for (int i = 0; i < n; ++i) out.push_back(alphabet[uniform(rng, 0, static_cast<int>(alphabet.size()) - 1)]);
  return out;
}

/// Random recursive tree: vertex k hangs below a uniformly chosen earlier vertex.
inline std::vector<int> parents(Engine& rng, int n) {
  std::vector<int> parent(n, -1);
  for (int k = 1; k < n; ++k) parent[k] = uniform(rng, 0, k - 1);
  return parent;
}

inline RootedTree tree(Engine& rng, std::vector<Generator> labels) {
  std::shuffle(labels.begin(), labels.end(), rng);
  return tree_from_parents(labels, parents(rng, static_cast<int>(labels.size())));
}

inline OrientedGraph graph(Engine& rng, std::vector<Generator> labels) {
  std::shuffle(labels.begin(), labels.end(), rng);
  const std::vector<int> parent = parents(rng, static_cast<int>(labels.size()));
  std::vector<Edge> edges;
  for (int v = 1; v < static_cast<int>(labels.size()); ++v) {
    if (uniform(rng, 0, 1)) {
      edges.emplace_back(parent[v], v);
    } else {
      edges.emplace_back(v, parent[v]);
    }
  }
  return OrientedGraph(std::move(labels), std::move(edges));
}

/// Uniformly random split points over a shuffled leaf sequence.
inline LieExpr bracket(Engine& rng, std::vector<Generator> labels) {
  std::shuffle(labels.begin(), labels.end(), rng);
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> LieExpr {
    if (hi - lo == 1) return LieExpr(labels[lo]);
    const std::size_t k = static_cast<std::size_t>(uniform(rng, static_cast<int>(lo) + 1, static_cast<int>(hi) - 1));
    return liecoalg::bracket(self(self, lo, k), self(self, k, hi));
  };
  return build(build, 0, labels.size());
}

template <class Basis>
Basis shape(Engine& rng, const std::vector<Generator>& labels) {
  if constexpr (std::is_same_v<Basis, Word>) {
    std::vector<Generator> shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    return Word(std::move(shuffled));
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    return tree(rng, labels);
  } else if constexpr (std::is_same_v<Basis, OrientedGraph>) {
    return graph(rng, labels);
  } else {
    return bracket(rng, labels);
  }
}

inline Scalar coefficient(Engine& rng) {
  const int num = uniform(rng, 1, 4) * (uniform(rng, 0, 1) ? 1 : -1);
  const int den = uniform(rng, 0, 3) == 0 ? 2 : 1;
  return Scalar(num, den);
}

/// One to `max_terms` shapes on the given label multiset, random coefficients.
template <class Basis>
LinearCombo<Basis> combo(Engine& rng, const std::vector<Generator>& labels, int max_terms = 3) {
  LinearCombo<Basis> out;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) out.add_term(shape<Basis>(rng, labels), coefficient(rng));
  return out;
}

}  // namespace liecoalg::random

#endif  // LIECOALG_RANDOM_HPP
