#include <gtest/gtest.h>

#include "liecoalg/pairing.hpp"
#include "liecoalg/random.hpp"
#include "liecoalg/text.hpp"

using namespace liecoalg;

namespace {

const std::vector<Generator>& abc() {
  static const std::vector<Generator> letters = parse_alphabet("a,b,c");
  return letters;
}

template <class Basis>
LinearCombo<Basis> dual(const char* text) {
  return parse_combo<Basis>(text);
}

LinearCombo<LieExpr> lie(const char* text) { return LinearCombo<LieExpr>(parse_lie(text)); }

}  // namespace

TEST(LieTreeIndex, RootsAndSigns) {
  const LieTreeIndex left(parse_lie("[[a,b],c]"));
  EXPECT_EQ(left.leaf_count(), 3u);
  EXPECT_EQ(left.internal_count(), 2u);
  EXPECT_EQ(left.root_of(0, 1), 1);
  EXPECT_EQ(left.root_of(0, 2), 0);
  EXPECT_EQ(left.root_of(2, 1), 0);
  EXPECT_THROW(left.root_of(1, 1), Error);
  const LieTreeIndex ab(parse_lie("[a,b]"));
  EXPECT_EQ(ab.sign_of(0, 1), 1);
  EXPECT_EQ(ab.sign_of(1, 0), -1);
  EXPECT_THROW(ab.sign_of(0, 0), Error);
  // [a,[c,b]]: b sits at leaf 2, c at leaf 1
  const LieTreeIndex acb(parse_lie("[a,[c,b]]"));
  EXPECT_EQ(acb.sign_of(2, 1), -1);
  EXPECT_EQ(acb.root_of(1, 2), 1);
}

TEST(PairExpand, Examples) {
  EXPECT_EQ(pair_expand(dual<RootedTree>("a(b,c)"), lie("[[a,b],c]")), 1);
  EXPECT_EQ(pair_expand(dual<OrientedGraph>("(a=a,b=b; a->b)"), lie("[a,b]")), 1);
  EXPECT_EQ(pair_expand(dual<Word>("abbba"), lie("[[[b,a],b],[a,b]]")), 2);
  EXPECT_EQ(pair_expand(dual<Word>("ab"), lie("[[a,b],c]")), 0);
}

TEST(PairRecursive, Examples) {
  EXPECT_EQ(pair_recursive(dual<Word>("a"), lie("a")), 1);
  EXPECT_EQ(pair_recursive(dual<Word>("a"), lie("b")), 0);
  EXPECT_EQ(pair_recursive(dual<Word>("ab"), lie("[[a,b],c]")), 0);
  EXPECT_EQ(pair_recursive(dual<Word>("abbba"), lie("[[[b,a],b],[a,b]]")), 2);
  // the recursion's first split, term by term
  EXPECT_EQ(pair_recursive(dual<Word>("abb"), lie("[[b,a],b]")), -1);
  EXPECT_EQ(pair_recursive(dual<Word>("ba"), lie("[a,b]")), -1);
  EXPECT_EQ(pair_recursive(dual<Word>("abbb"), lie("[[b,a],b]")), 0);
  EXPECT_EQ(pair_recursive(dual<Word>("bba"), lie("[[b,a],b]")), -1);
  EXPECT_EQ(pair_recursive(dual<Word>("ab"), lie("[a,b]")), 1);
  EXPECT_EQ(pair_recursive(dual<Word>("ab"), lie("[b,a]")), -1);
  EXPECT_EQ(pair_recursive(dual<Word>("ba"), lie("[b,a]")), 1);
}

TEST(PairSigma, NumberedBijections) {
  // R = 1(2,3) against T = [[a,b],c]
  const ShapeEdges r = shape_edges(parse_tree("a(b,c)"));
  const LieTreeIndex t(parse_lie("[[a,b],c]"));
  EXPECT_EQ(sigma_term(r, t, {0, 1, 2}), 1);
  EXPECT_EQ(sigma_term(r, t, {2, 0, 1}), 0);
}

TEST(PairSigma, StarGraph) {
  const auto star = dual<OrientedGraph>("(a=a,b=b,c=c; a->b, a->c)");
  EXPECT_EQ(pair_sigma(star, parse_lie("[a,[b,c]]")), 0);
  EXPECT_EQ(pair_sigma(star, parse_lie("[[a,b],c]")), 1);
  EXPECT_EQ(pair_expand(star, lie("[[a,b],c]")), 1);
}

TEST(PairSigma, RepeatedLabelsCountAutomorphisms) {
  const RootedTree baa = parse_tree("b(a,a)");
  EXPECT_EQ(symmetry_factor(baa), 2);
  EXPECT_EQ(expand_prelie(parse_lie("[[a,b],a]")).coefficient_of(baa), -1);
  const LinearCombo<RootedTree> d(baa);
  EXPECT_EQ(pair_sigma(d, parse_lie("[[a,b],a]")), -2);
  EXPECT_EQ(pair_recursive(d, lie("[[a,b],a]")), -2);
  EXPECT_EQ(pair_expand(d, lie("[[a,b],a]")), -2);
  EXPECT_EQ(symmetry_factor(parse_graph("v1=a,v2=b,v3=a; v2->v1, v2->v3")), 2);
  EXPECT_EQ(symmetry_factor(parse_graph("v1=a,v2=b,v3=a; v1->v2, v2->v3")), 1);
  EXPECT_EQ(symmetry_factor(parse_word("aaa")), 1);
}

TEST(PairRightNormed, Examples) {
  const Word w = parse_word("abcdef");
  EXPECT_EQ(pair_right_normed(w, parse_lie("[a,[f,[b,[e,[c,d]]]]]")), 1);
  EXPECT_EQ(pair_right_normed(w, parse_lie("[f,[a,[e,[b,[d,c]]]]]")), -1);
  EXPECT_EQ(pair_right_normed(w, parse_lie("[f,[e,[a,[c,[b,d]]]]]")), 0);
  EXPECT_EQ(pair_right_normed(parse_word("abbab"), parse_lie("[a,[b,[b,[b,a]]]]")), -3);
  EXPECT_THROW(pair_right_normed(parse_word("abc"), parse_lie("[[a,b],c]")), Error);
}

TEST(PairRightNormed, AgreesWithExpansion) {
  random::Engine rng(41);
  for (int t = 0; t < 400; ++t) {
    const auto labels = random::letters(rng, abc(), random::uniform(rng, 1, 7));
    auto shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const LieExpr l = right_normed(shuffled);
    const Word w = random::shape<Word>(rng, labels);
    EXPECT_EQ(pair_right_normed(w, l), pair_expand(LinearCombo<Word>(w), LinearCombo<LieExpr>(l)))
        << w.to_string() << " vs " << l.text();
  }
}

TEST(SigmaEdgeSplit, AtMostOneTermAndSumMatches) {
  random::Engine rng(42);
  int nonzero = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = random::uniform(rng, 2, 6);
    const auto labels = random::letters(rng, abc(), n);
    const ShapeEdges shape =
        t % 2 ? shape_edges(random::tree(rng, labels)) : shape_edges(random::graph(rng, labels));
    const LieExpr l = random::bracket(rng, labels);
    const LieTreeIndex idx(l);
    for_each_label_preserving_bijection(shape.labels, idx.leaf_labels(), [&](const std::vector<int>& sigma) {
      const auto terms = sigma_edge_split(shape, l, sigma);
      int count = 0, sum = 0;
      for (int v : terms) {
        count += v != 0;
        sum += v;
      }
      EXPECT_LE(count, 1);
      EXPECT_EQ(sum, sigma_term(shape, idx, sigma));
      nonzero += sum != 0;
    });
  }
  EXPECT_GT(nonzero, 0);
}

template <class Basis>
void check_agreement(random::Engine& rng, int trials) {
  RecursivePairing<Basis> recursive;
  for (int t = 0; t < trials; ++t) {
    const auto labels = random::letters(rng, abc(), random::uniform(rng, 1, 6));
    const Basis s = random::shape<Basis>(rng, labels);
    const LieExpr l = random::bracket(rng, labels);
    const LinearCombo<Basis> d(s);
    const Scalar e = pair_expand(d, LinearCombo<LieExpr>(l));
    EXPECT_EQ(e, recursive(s, l)) << to_text(s) << " vs " << l.text();
    EXPECT_EQ(e, pair_sigma(d, l)) << to_text(s) << " vs " << l.text();
  }
}

TEST(Agreement, ThreeAlgorithms) {
  random::Engine rng(43);
  check_agreement<Word>(rng, 300);
  check_agreement<RootedTree>(rng, 300);
  check_agreement<OrientedGraph>(rng, 300);
}

template <class Basis>
void check_compatibility(random::Engine& rng, int trials) {
  RecursivePairing<Basis> pair;
  for (int t = 0; t < trials; ++t) {
    const auto lx = random::letters(rng, abc(), random::uniform(rng, 1, 3));
    const auto ly = random::letters(rng, abc(), random::uniform(rng, 1, 3));
    auto all = lx;
    all.insert(all.end(), ly.begin(), ly.end());
    const LieExpr x = random::bracket(rng, lx), y = random::bracket(rng, ly);
    const auto phi = random::combo<Basis>(rng, all);
    Scalar rhs = 0;
    for (const auto& [f, c] : cobracket(phi)) rhs += c * pair_expand(LinearCombo<Basis>(f.first), LinearCombo<LieExpr>(x)) *
                                                     pair_expand(LinearCombo<Basis>(f.second), LinearCombo<LieExpr>(y));
    EXPECT_EQ(pair_expand(phi, LinearCombo<LieExpr>(bracket(x, y))), rhs);
  }
}

TEST(Compatibility, CobracketIsDualToBracket) {
  random::Engine rng(44);
  check_compatibility<Word>(rng, 150);
  check_compatibility<RootedTree>(rng, 150);
  check_compatibility<OrientedGraph>(rng, 150);
}

TEST(Factorization, WordsThroughTreesAndGraphs) {
  random::Engine rng(45);
  for (int t = 0; t < 300; ++t) {
    const auto labels = random::letters(rng, abc(), random::uniform(rng, 1, 6));
    const Word w = random::shape<Word>(rng, labels);
    const LinearCombo<LieExpr> l(random::bracket(rng, labels));
    const Scalar a = pair_expand(LinearCombo<Word>(w), l);
    EXPECT_EQ(a, pair_expand(LinearCombo<RootedTree>(i_prelie(w)), l));
    EXPECT_EQ(a, pair_expand(LinearCombo<OrientedGraph>(i_graph(i_prelie(w))), l));
  }
}

TEST(Pairing, Bilinear) {
  random::Engine rng(46);
  for (int t = 0; t < 100; ++t) {
    const auto labels = random::letters(rng, abc(), random::uniform(rng, 2, 5));
    const auto x = random::combo<OrientedGraph>(rng, labels), y = random::combo<OrientedGraph>(rng, labels);
    const auto l = random::combo<LieExpr>(rng, labels);
    const Scalar s = random::coefficient(rng);
    EXPECT_EQ(pair_recursive(s * x + y, l), s * pair_recursive(x, l) + pair_recursive(y, l));
    EXPECT_EQ(pair_sigma(x, l), pair_expand(x, l));
  }
}
