#include <gtest/gtest.h>

#include "liecoalg/cobracket.hpp"
#include "liecoalg/envelope.hpp"
#include "liecoalg/random.hpp"
#include "liecoalg/text.hpp"

using namespace liecoalg;

namespace {

const std::vector<Generator>& abc() {
  static const std::vector<Generator> letters = parse_alphabet("a,b,c");
  return letters;
}

template <class Basis>
TensorCombo<Basis> tensor(std::initializer_list<std::tuple<int, const char*, const char*>> terms) {
  TensorCombo<Basis> out;
  for (const auto& [c, x, y] : terms) out.add_term({parse_shape<Basis>(x), parse_shape<Basis>(y)}, c);
  return out;
}

template <class Basis>
LinearCombo<Basis> random_dual(random::Engine& rng, int max_weight) {
  return random::combo<Basis>(rng, random::letters(rng, abc(), random::uniform(rng, 1, max_weight)));
}

}  // namespace

TEST(CobracketAssoc, Examples) {
  EXPECT_EQ(cobracket_assoc(parse_combo<Word>("ab")), tensor<Word>({{1, "a", "b"}, {-1, "b", "a"}}));
  EXPECT_EQ(cobracket_assoc(parse_combo<Word>("abc")),
            tensor<Word>({{1, "a", "bc"}, {1, "ab", "c"}, {-1, "bc", "a"}, {-1, "c", "ab"}}));
  EXPECT_TRUE(cobracket_assoc(parse_combo<Word>("a")).empty());
}

TEST(CobracketPrelie, Examples) {
  EXPECT_EQ(cobracket_prelie(parse_combo<RootedTree>("a(b)")), tensor<RootedTree>({{1, "a", "b"}, {-1, "b", "a"}}));
  EXPECT_EQ(cobracket_prelie(parse_combo<RootedTree>("a(b,c)")),
            tensor<RootedTree>({{1, "a(b)", "c"}, {-1, "c", "a(b)"}, {1, "a(c)", "b"}, {-1, "b", "a(c)"}}));
  EXPECT_TRUE(cobracket_prelie(parse_combo<RootedTree>("a")).empty());
  // the branch keeps its own root
  EXPECT_EQ(cobracket_prelie(parse_combo<RootedTree>("a(b(c))")),
            tensor<RootedTree>({{1, "a", "b(c)"}, {-1, "b(c)", "a"}, {1, "a(b)", "c"}, {-1, "c", "a(b)"}}));
}

TEST(CobracketGraph, Examples) {
  EXPECT_EQ(cobracket_graph(parse_combo<OrientedGraph>("(a=a,b=b; a->b)")),
            tensor<OrientedGraph>({{1, "a=a", "b=b"}, {-1, "b=b", "a=a"}}));
  EXPECT_EQ(cobracket_graph(parse_combo<OrientedGraph>("(a=a,b=b,c=c; a->b, b->c)")),
            tensor<OrientedGraph>({{1, "a=a,b=b; a->b", "c=c"},
                                   {-1, "c=c", "a=a,b=b; a->b"},
                                   {1, "a=a", "b=b,c=c; b->c"},
                                   {-1, "b=b,c=c; b->c", "a=a"}}));
  // an edge pointing at the root side puts the far component first
  EXPECT_EQ(cobracket_graph(parse_combo<OrientedGraph>("(a=a,b=b; b->a)")),
            tensor<OrientedGraph>({{1, "b=b", "a=a"}, {-1, "a=a", "b=b"}}));
}

TEST(Cuts, CountMatchesEdges) {
  random::Engine rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto labels = random::letters(rng, abc(), random::uniform(rng, 1, 6));
    const RootedTree tree = random::tree(rng, labels);
    const OrientedGraph graph = random::graph(rng, labels);
    EXPECT_EQ(cuts(tree).size(), labels.size() - 1);
    EXPECT_EQ(cuts(graph).size(), labels.size() - 1);
    for (const auto& [x, y] : cuts(graph)) EXPECT_EQ(multidegree(x) + multidegree(y), multidegree(graph));
    for (const auto& [x, y] : cuts(tree)) EXPECT_EQ(x.weight() + y.weight(), tree.weight());
  }
}

template <class Basis>
void check_coantisymmetry(random::Engine& rng) {
  for (int t = 0; t < 100; ++t) {
    const auto phi = random_dual<Basis>(rng, 6);
    const auto delta = cobracket(phi);
    EXPECT_EQ(swap_factors(delta), -delta);
  }
}

TEST(Cobracket, CoAntisymmetric) {
  random::Engine rng(32);
  check_coantisymmetry<Word>(rng);
  check_coantisymmetry<RootedTree>(rng);
  check_coantisymmetry<OrientedGraph>(rng);
}

TEST(Cobracket, InclusionsAreCoalgebraMaps) {
  random::Engine rng(33);
  for (int t = 0; t < 200; ++t) {
    const auto w = random_dual<Word>(rng, 6);
    EXPECT_EQ(tensor_map<RootedTree>(cobracket(w), [](const Word& u) { return i_prelie(u); }),
              cobracket(i_prelie(w)));
    const auto r = random_dual<RootedTree>(rng, 6);
    EXPECT_EQ(tensor_map<OrientedGraph>(cobracket(r), [](const RootedTree& s) { return i_graph(s); }),
              cobracket(i_graph(r)));
  }
}

TEST(Cobracket, Linear) {
  random::Engine rng(34);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_dual<OrientedGraph>(rng, 5), y = random_dual<OrientedGraph>(rng, 5);
    const Scalar s = random::coefficient(rng);
    EXPECT_EQ(cobracket(s * x + y), s * cobracket(x) + cobracket(y));
  }
}
