#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "liecoalg/random.hpp"
#include "liecoalg/terms.hpp"

using namespace liecoalg;

namespace {

Generator g(const char* name) { return Generator(name); }

// Brute-force canonical form: the lexicographically least (labels, edges)
// listing over every vertex renumbering.
std::pair<std::vector<std::string>, std::vector<Edge>> brute_force_form(const std::vector<Generator>& labels,
                                                                        const std::vector<Edge>& edges) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::pair<std::vector<std::string>, std::vector<Edge>> best;
  bool first = true;
  do {
    std::vector<std::string> ls(n);
    for (int v = 0; v < n; ++v) ls[perm[v]] = labels[v].name();
    std::vector<Edge> es;
    for (const auto& [s, t] : edges) es.emplace_back(perm[s], perm[t]);
    std::sort(es.begin(), es.end());
    auto candidate = std::make_pair(ls, es);
    if (first || candidate < best) best = candidate;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every oriented tree on n vertices, as parent arrays with parent[v] < v and
// a direction bit per edge.
template <class Visit>
void for_each_oriented_tree(int n, Visit&& visit) {
  std::vector<int> parent(n, -1);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int mask = 0; mask < (1 << std::max(n - 1, 0)); ++mask) {
        std::vector<Edge> edges;
        for (int u = 1; u < n; ++u) {
          if (mask >> (u - 1) & 1) {
            edges.emplace_back(parent[u], u);
          } else {
            edges.emplace_back(u, parent[u]);
          }
        }
        visit(edges);
      }
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace

TEST(Generator, AcceptsIdentifiers) {
  EXPECT_EQ(g("a").name(), "a");
  EXPECT_EQ(g("x_12").name(), "x_12");
  EXPECT_THROW(Generator(""), Error);
  EXPECT_THROW(Generator("1a"), Error);
  EXPECT_THROW(Generator("a-b"), Error);
}

TEST(Multidegree, CountsAndOrdering) {
  Multidegree d = Multidegree::of_labels(std::vector<Generator>{g("b"), g("a"), g("b")});
  EXPECT_EQ(d.count(g("a")), 1);
  EXPECT_EQ(d.count(g("b")), 2);
  EXPECT_EQ(d.count(g("c")), 0);
  EXPECT_EQ(d.total(), 3);
  EXPECT_EQ(d.to_string(), "{a:1,b:2}");
  EXPECT_FALSE(d.has_distinct_labels());
  EXPECT_EQ(d.labels(), (std::vector<Generator>{g("a"), g("b"), g("b")}));
  Multidegree e;
  e.add(g("a"), 1);
  e.add(g("b"), 2);
  EXPECT_EQ(d, e);
}

TEST(Word, PrintsJuxtaposedOnlyForSingleLetters) {
  EXPECT_EQ(Word(std::vector<Generator>{g("a"), g("b")}).to_string(), "ab");
  EXPECT_EQ(Word(std::vector<Generator>{g("x1"), g("x2")}).to_string(), "x1 x2");
  EXPECT_THROW(Word(std::vector<Generator>{}), Error);
}

TEST(RootedTree, ChildOrderIsIrrelevant) {
  const RootedTree t1(g("a"), {RootedTree(g("c")), RootedTree(g("b"), {RootedTree(g("d"))})});
  const RootedTree t2(g("a"), {RootedTree(g("b"), {RootedTree(g("d"))}), RootedTree(g("c"))});
  EXPECT_EQ(t1, t2);
  EXPECT_EQ(t1.key(), "a(b(d),c)");
  EXPECT_EQ(t1.weight(), 4u);
  EXPECT_FALSE(t1.is_ladder());
  EXPECT_TRUE(RootedTree(g("a"), {RootedTree(g("b"))}).is_ladder());
}

TEST(RootedTree, FlattenRoundTrip) {
  random::Engine rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto labels = random::letters(rng, {g("a"), g("b"), g("c")}, random::uniform(rng, 1, 7));
    const RootedTree tree = random::tree(rng, labels);
    const FlatTree flat = flatten(tree);
    for (std::size_t v = 1; v < flat.size(); ++v) EXPECT_LT(flat.parent[v], static_cast<int>(v));
    EXPECT_EQ(tree_from_parents(flat.labels, flat.parent), tree);
  }
}

TEST(RootedTree, ParentArrayValidation) {
  EXPECT_THROW(tree_from_parents({g("a"), g("b")}, {-1, -1}), Error);
  EXPECT_THROW(tree_from_parents({g("a"), g("b"), g("c")}, {-1, 2, 1}), Error);
  EXPECT_THROW(tree_from_parents({g("a")}, {-1, 0}), Error);
}

TEST(OrientedGraph, RejectsNonTrees) {
  EXPECT_THROW(OrientedGraph({g("a"), g("b"), g("c")}, {{0, 1}, {1, 2}, {2, 0}}), Error);
  EXPECT_THROW(OrientedGraph({g("a"), g("b"), g("c")}, {{0, 1}}), Error);
  EXPECT_THROW(OrientedGraph({g("a")}, {{0, 0}}), Error);
  EXPECT_THROW(OrientedGraph({g("a"), g("b")}, {{0, 2}}), Error);
  try {
    OrientedGraph({g("a"), g("b")}, {{0, 1}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("oriented tree"), std::string::npos);
  }
}

TEST(OrientedGraph, VertexOrderDoesNotMatter) {
  const OrientedGraph a({g("a"), g("b"), g("c")}, {{0, 1}, {2, 1}});
  const OrientedGraph b({g("c"), g("a"), g("b")}, {{1, 2}, {0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_NE(a, OrientedGraph({g("a"), g("b"), g("c")}, {{1, 0}, {2, 1}}));
}

// Equal canonical keys exactly when the brute-force forms agree.
TEST(OrientedGraph, CanonicalFormMatchesBruteForce) {
  auto check = [](const std::vector<Generator>& labels, std::size_t expected_classes) {
    std::map<std::pair<std::vector<std::string>, std::vector<Edge>>, std::string> by_form;
    std::set<std::string> keys;
    for_each_oriented_tree(static_cast<int>(labels.size()), [&](const std::vector<Edge>& edges) {
      const auto form = brute_force_form(labels, edges);
      const std::string key = OrientedGraph(labels, edges).key();
      auto [it, inserted] = by_form.emplace(form, key);
      if (!inserted) EXPECT_EQ(it->second, key);
      keys.insert(key);
    });
    EXPECT_EQ(keys.size(), by_form.size());
    if (expected_classes) EXPECT_EQ(keys.size(), expected_classes);
  };
  // unlabeled oriented trees: 1, 1, 3, 8, 27, 91
  const std::size_t counts[] = {1, 1, 3, 8, 27, 91};
  for (int n = 1; n <= 6; ++n) check(std::vector<Generator>(n, g("a")), counts[n - 1]);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<Generator> labels(n, g("a"));
      std::fill(labels.begin(), labels.begin() + k, g("b"));
      check(labels, 0);
    }
  }
}

TEST(Basis, CountsMatchClosedForms) {
  for (int n = 1; n <= 5; ++n) {
    Multidegree distinct;
    for (int i = 0; i < n; ++i) distinct.add(Generator(std::string(1, static_cast<char>('a' + i))), 1);
    std::size_t fact = 1, trees = 1, graphs = std::size_t(1) << (n - 1);
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n - 1; ++i) trees *= n;
    for (int i = 0; i + 2 < n; ++i) graphs *= n;
    EXPECT_EQ(words_of(distinct).size(), fact);
    EXPECT_EQ(rooted_trees_of(distinct).size(), trees);
    EXPECT_EQ(graphs_of(distinct).size(), graphs);
  }
  // unlabeled rooted trees: 1, 1, 2, 4, 9, 20
  const std::size_t rooted[] = {1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) {
    Multidegree d;
    d.add(g("a"), n);
    EXPECT_EQ(rooted_trees_of(d).size(), rooted[n - 1]);
  }
}

TEST(Basis, MultidegreesOfWeight) {
  const auto ds = multidegrees_of_weight({g("a"), g("b"), g("c")}, 3);
  EXPECT_EQ(ds.size(), 10u);
  for (const auto& d : ds) EXPECT_EQ(d.total(), 3);
}

TEST(LinearCombo, CancellationLeavesNoZeros) {
  const Word ab(std::vector<Generator>{g("a"), g("b")});
  LinearCombo<Word> x = LinearCombo<Word>::term(2, ab);
  x += LinearCombo<Word>::term(-2, ab);
  EXPECT_TRUE(x.empty());
  EXPECT_EQ(x.size(), 0u);
  EXPECT_EQ(x.coefficient_of(ab), 0);
  EXPECT_TRUE((Scalar(0) * LinearCombo<Word>(ab)).empty());
}

TEST(LinearCombo, VectorSpaceLaws) {
  random::Engine rng(2);
  const std::vector<Generator> abc{g("a"), g("b"), g("c")};
  for (int t = 0; t < 100; ++t) {
    const auto labels = random::letters(rng, abc, 3);
    const auto x = random::combo<RootedTree>(rng, labels), y = random::combo<RootedTree>(rng, labels);
    const Scalar s = random::coefficient(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(s * (x + y), s * x + s * y);
    EXPECT_TRUE((x - x).empty());
    EXPECT_EQ(-(-x), x);
  }
}

TEST(LinearCombo, SplitByMultidegree) {
  const Word ab(std::vector<Generator>{g("a"), g("b")}), aa(std::vector<Generator>{g("a"), g("a")});
  const LinearCombo<Word> x{{ab, 1}, {aa, 3}, {Word(std::vector<Generator>{g("b"), g("a")}), -1}};
  const auto parts = split_by_multidegree(x);
  EXPECT_EQ(parts.size(), 2u);
  EXPECT_THROW(multidegree_of(x), Error);
  EXPECT_THROW(multidegree_of(LinearCombo<Word>()), Error);
  EXPECT_EQ(multidegree_of(parts.begin()->second).total(), 2);
}

TEST(LieExpr, NormedForms) {
  const std::vector<Generator> abc{g("a"), g("b"), g("c")};
  EXPECT_EQ(left_normed(abc).text(), "[[a,b],c]");
  EXPECT_EQ(right_normed(abc).text(), "[a,[b,c]]");
  EXPECT_TRUE(right_normed(abc).is_right_normed());
  EXPECT_FALSE(left_normed(abc).is_right_normed());
  EXPECT_EQ(left_normed(abc).leaves(), abc);
  EXPECT_EQ(multidegree(left_normed(abc)).total(), 3);
}
