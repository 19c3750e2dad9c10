#include <gtest/gtest.h>

#include <sstream>

#include "liecoalg/cli.hpp"
#include "liecoalg/json_io.hpp"
#include "liecoalg/random.hpp"
#include "liecoalg/text.hpp"

using namespace liecoalg;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

}  // namespace

TEST(Parse, Shapes) {
  EXPECT_EQ(parse_word("abc").size(), 3u);
  EXPECT_EQ(parse_word("x1 x2 foo"), Word(parse_alphabet("x1,x2,foo")));
  EXPECT_EQ(parse_tree("a(c,b(d))").key(), "a(b(d),c)");
  EXPECT_EQ(parse_graph("v1=a,v2=b; v2->v1"), parse_graph("(p=b,q=a; p->q)"));
  EXPECT_EQ(parse_lie(" [ [a , b] ,c ]").text(), "[[a,b],c]");
  EXPECT_EQ(parse_generator("x_1").name(), "x_1");
  EXPECT_EQ(parse_alphabet("a, b,c").size(), 3u);
}

TEST(Parse, Combinations) {
  const auto x = parse_combo<Word>("2*ab - 1/2*ba + ab");
  EXPECT_EQ(x.coefficient_of(parse_word("ab")), 3);
  EXPECT_EQ(x.coefficient_of(parse_word("ba")), Scalar(-1, 2));
  EXPECT_TRUE(parse_combo<Word>("0").empty());
  EXPECT_TRUE(parse_combo<RootedTree>("a(b) - a(b)").empty());
  EXPECT_EQ(parse_combo<OrientedGraph>("-(a=a,b=b; a->b)").size(), 1u);
}

TEST(Parse, ErrorPositions) {
  EXPECT_EQ(parse_error_position([] { parse_lie("[a,"); }), 3u);
  EXPECT_EQ(parse_error_position([] { parse_lie("[a,b]]"); }), 5u);
  EXPECT_EQ(parse_error_position([] { parse_tree("a(b,)"); }), 4u);
  EXPECT_EQ(parse_error_position([] { parse_graph("v1=a; v1->v2"); }), 10u);
  EXPECT_THROW(parse_combo<Word>("2*"), ParseError);
  EXPECT_THROW(parse_combo<Word>("1/0*ab"), Error);
  EXPECT_THROW(parse_alphabet("a,,b"), Error);
  EXPECT_THROW(parse_alphabet("a,a"), Error);
}

TEST(Print, Combinations) {
  EXPECT_EQ(to_text(LinearCombo<Word>()), "0");
  EXPECT_EQ(to_text(parse_combo<Word>("ab - 3/2*ba")), "ab - 3/2*ba");
  EXPECT_EQ(to_text(parse_combo<Word>("-ab")), "-ab");
  EXPECT_EQ(to_text(parse_combo<Word>("x1 x2")), "x1 x2");
  EXPECT_EQ(to_text(LinearCombo<Word>(Word(Generator("x1")))), "(x1)");
  EXPECT_EQ(to_text(cobracket(parse_combo<Word>("ab"))), "a ⊗ b - b ⊗ a");
}

template <class Basis>
void check_round_trip(random::Engine& rng, const std::vector<Generator>& alphabet) {
  for (int t = 0; t < 150; ++t) {
    const auto labels = random::letters(rng, alphabet, random::uniform(rng, 1, 6));
    const auto x = random::combo<Basis>(rng, labels);
    EXPECT_EQ(parse_combo<Basis>(to_text(x)), x) << to_text(x);
    const Basis s = random::shape<Basis>(rng, labels);
    EXPECT_EQ(parse_shape<Basis>(to_text(s)), s) << to_text(s);
  }
}

TEST(RoundTrip, AllShapeKinds) {
  random::Engine rng(71);
  for (const auto& alphabet : {parse_alphabet("a,b,c"), parse_alphabet("x1,x2,foo")}) {
    check_round_trip<Word>(rng, alphabet);
    check_round_trip<RootedTree>(rng, alphabet);
    check_round_trip<OrientedGraph>(rng, alphabet);
    check_round_trip<LieExpr>(rng, alphabet);
  }
}

TEST(Json, Forms) {
  EXPECT_EQ(to_json(parse_word("ab")).dump(), R"({"word":["a","b"]})");
  EXPECT_EQ(to_json(parse_tree("a(b)")).dump(), R"({"children":[{"children":[],"label":"b"}],"label":"a"})");
  EXPECT_EQ(to_json(parse_graph("a=a,b=b; a->b")).dump(), R"({"edges":[[0,1]],"vertices":["a","b"]})");
  EXPECT_EQ(to_json(parse_lie("[a,b]")).dump(), R"({"bracket":[{"gen":"a"},{"gen":"b"}]})");
  EXPECT_EQ(to_json(parse_combo<Word>("-1/2*ab")).dump(), R"({"terms":[{"coeff":"-1/2","shape":{"word":["a","b"]}}]})");
}

TEST(Cli, Goldens) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> goldens{
      {{"pair", "--side", "assoc", "abbba", "[[[b,a],b],[a,b]]"}, "2\n"},
      {{"pair", "--algo", "rightnormed", "--side", "assoc", "abbab", "[a,[b,[b,[b,a]]]]"}, "-3\n"},
      {{"pair", "--algo", "sigma", "--side", "graph", "(a=a,b=b,c=c; a->b, a->c)", "[[a,b],c]"}, "1\n"},
      {{"expand", "--side", "prelie", "[[a,b],c]"}, "a(b(c)) + a(b,c) - b(a(c)) - b(a,c) - c(a(b)) + c(b(a))\n"},
      {{"expand", "--side", "assoc", "1/2*[a,b] - [b,a]"}, "3/2*ab - 3/2*ba\n"},
      {{"cobracket", "--side", "prelie", "a(b)"}, "a ⊗ b - b ⊗ a\n"},
      {{"product", "--kind", "shuffle", "ab", "c"}, "abc + acb + cab\n"},
      {{"lyndon", "--alphabet", "a,b", "--max-len", "3"}, "a\naab\nab\nabb\nb\n"},
      {{"kernel-check", "--side", "graph", "1*(v1=a,v2=b; v1->v2) + 1*(v1=a,v2=b; v2->v1)"}, "true\n"},
      {{"kernel-check", "--side", "prelie", "a(b)"}, "false\n"},
      {{"rank", "--side", "graph", "a:2,b:2,c:2"}, "14\n"},
      {{"operad", "dims", "--family", "graph", "--binary", "3"}, "11\n"},
      {{"operad", "compose", "--family", "prelie", "x1(x2)", "1", "x1(x2)"}, "x1(x2(x3)) + x1(x2,x3)\n"},
      {{"--json", "pair", "--side", "assoc", "abbba", "[[[b,a],b],[a,b]]"}, "{\"value\":\"2\"}\n"},
      {{"--json", "kernel-check", "--side", "prelie", "a(b)+b(a)"}, "{\"value\":true}\n"},
      {{"--json", "expand", "--side", "assoc", "[a,b]"},
       "{\"terms\":[{\"coeff\":\"1\",\"shape\":{\"word\":[\"a\",\"b\"]}},"
       "{\"coeff\":\"-1\",\"shape\":{\"word\":[\"b\",\"a\"]}}]}\n"},
  };
  for (const auto& [args, expected] : goldens) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << args.front() << ": " << r.err;
    EXPECT_EQ(r.out, expected) << args.front();
  }
}

TEST(Cli, ReduceLongPrintsNormalForm) {
  const CliRun r = run({"reduce-long", "--base", "a", "(a=a,b=b,c=c; a->b, a->c)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_combo<OrientedGraph>(r.out),
            parse_combo<OrientedGraph>("(a=a,b=b,c=c; a->b, b->c) + (a=a,b=b,c=c; a->c, c->b)"));
}

TEST(Cli, JsonIsStable) {
  const std::vector<std::string> args{"--json", "expand", "--side", "graph", "[[a,b],c]"};
  const CliRun first = run(args), second = run(args);
  EXPECT_EQ(first.out, second.out);
  const auto parsed = nlohmann::json::parse(first.out);
  EXPECT_EQ(parsed.at("terms").size(), 8u);
  for (const auto& term : parsed.at("terms")) EXPECT_TRUE(term.at("coeff").is_string());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, exit_parse_error);
  EXPECT_EQ(run({"bogus"}).code, exit_parse_error);
  EXPECT_EQ(run({"expand", "--side", "assoc", "[a,"}).code, exit_parse_error);
  EXPECT_EQ(run({"expand", "--side", "nowhere", "[a,b]"}).code, exit_parse_error);
  EXPECT_EQ(run({"reduce-long", "--base", "z", "(a=a,b=b; a->b)"}).code, exit_domain_error);
  EXPECT_EQ(run({"pair", "--algo", "rightnormed", "--side", "assoc", "abc", "[[a,b],c]"}).code, exit_domain_error);
  EXPECT_EQ(run({"pair", "--algo", "rightnormed", "--side", "prelie", "a(b)", "[a,b]"}).code, exit_domain_error);
  EXPECT_EQ(run({"operad", "dims", "--family", "graph", "9"}).code, exit_domain_error);
  EXPECT_EQ(run({"operad", "compose", "--family", "prelie", "x1(x3)", "1", "x1"}).code, exit_domain_error);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, exit_ok);
  EXPECT_NE(help.out.find("expand"), std::string::npos);
  const CliRun bad = run({"expand", "--side", "assoc", "[a,"});
  EXPECT_NE(bad.err.find("position 3"), std::string::npos);
}

TEST(Cli, CheckAxioms) {
  const CliRun r = run({"operad", "check-axioms", "--family", "lie", "--trials", "5", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ok ", 0), 0u);
}
