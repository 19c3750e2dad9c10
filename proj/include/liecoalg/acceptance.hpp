#ifndef LIECOALG_ACCEPTANCE_HPP
#define LIECOALG_ACCEPTANCE_HPP

// End-to-end acceptance criteria. Each returns one pass/fail line; the CLI
// criterion takes the command runner as a parameter.

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "liecoalg/liedual.hpp"
#include "liecoalg/operads.hpp"
#include "liecoalg/random.hpp"
#include "liecoalg/text.hpp"

namespace liecoalg::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

using CliRunner = std::function<int(const std::vector<std::string>&, std::ostream&, std::ostream&)>;

namespace detail {

inline const std::vector<Generator>& abc() {
  static const std::vector<Generator> letters{Generator("a"), Generator("b"), Generator("c")};
  return letters;
}

inline std::vector<Generator> first_letters(int n) {
  std::vector<Generator> out;
  for (int i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Counts checks and keeps the first few failures for the detail line.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (notes.size() < 3) notes.push_back(what);
    }
  }
  std::string summary() const {
    std::string out = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    for (const std::string& n : notes) out += "; " + n;
    return out;
  }
};

inline Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

/// Necklace/Witt count of Lyndon words with the given letter content.
inline Integer witt_dimension(const Multidegree& d) {
  const int n = static_cast<int>(d.total());
  int g = 0;
  for (const auto& [gen, k] : d.entries()) g = std::gcd(g, k);
  Integer sum = 0;
  for (int e = 1; e <= g; ++e) {
    if (g % e != 0) continue;
    Integer term = factorial(n / e);
    for (const auto& [gen, k] : d.entries()) term /= factorial(k / e);
    sum += mobius(e) * term;
  }
  return sum / n;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CriterionResult worked_values() {
  struct Case {
    const char* word;
    const char* lie;
    int expected;
  };
  const Case cases[] = {
      {"abbba", "[[[b,a],b],[a,b]]", -2},         {"abcdef", "[a,[f,[b,[e,[c,d]]]]]", 1},
      {"abcdef", "[f,[a,[e,[b,[d,c]]]]]", -1},    {"abcdef", "[f,[e,[a,[c,[b,d]]]]]", 0},
      {"abbab", "[a,[b,[b,[b,a]]]]", -3},
  };
  detail::Tally tally;
  for (const Case& c : cases) {
    const Word w = parse_word(c.word);
    const LieExpr l = parse_lie(c.lie);
    const LinearCombo<Word> dual(w);
    const LinearCombo<LieExpr> lie(l);
    std::vector<std::pair<std::string, Scalar>> got{
        {"expand", pair_expand(dual, lie)},
        {"recursive", pair_recursive(dual, lie)},
        {"sigma", pair_sigma(w, l)},
    };
    if (l.is_right_normed()) got.emplace_back("rightnormed", pair_right_normed(w, l));
    for (const auto& [algo, value] : got) {
      tally.check(value == c.expected, std::string(c.word) + " vs " + c.lie + ": " + algo + " gives " +
                                           to_string(value) + ", expected " + std::to_string(c.expected));
    }
  }
  return {1, "worked pairing values", tally.failures == 0, tally.summary()};
}

inline CriterionResult reference_expansions() {
  detail::Tally tally;
  auto same = [&](const auto& got, const auto& expected, const std::string& what) {
    tally.check(got == expected, what + ": got " + to_text(got));
  };
  same(expand_prelie(parse_lie("[a,b]")), parse_combo<RootedTree>("a(b) - b(a)"), "p_p([a,b])");
  same(expand_prelie(parse_lie("[[a,b],c]")),
       parse_combo<RootedTree>("a(b(c)) + a(b,c) - b(a(c)) - b(a,c) - c(a(b)) + c(b(a))"), "p_p([[a,b],c])");
  same(expand_graph(parse_lie("[a,b]")), parse_combo<OrientedGraph>("(a=a,b=b; a->b) - (a=a,b=b; b->a)"),
       "p_G([a,b])");
  same(expand_graph(parse_lie("[[a,b],c]")),
       parse_combo<OrientedGraph>("(a=a,b=b,c=c; a->b, a->c) + (a=a,b=b,c=c; a->b, b->c)"
                                  " - (a=a,b=b,c=c; a->b, c->a) - (a=a,b=b,c=c; a->b, c->b)"
                                  " - (a=a,b=b,c=c; b->a, a->c) - (a=a,b=b,c=c; b->a, b->c)"
                                  " + (a=a,b=b,c=c; b->a, c->a) + (a=a,b=b,c=c; b->a, c->b)"),
       "p_G([[a,b],c])");
  same(prelie_product(parse_tree("a(b,c)"), parse_tree("d(e)")),
       parse_combo<RootedTree>("a(b,c,d(e)) + a(b(d(e)),c) + a(b,c(d(e)))"), "a(b,c) <| d(e)");
  const std::string path = "a=a,b=b,c=c,d=d,e=e; a->b, b->c, d->e, ";
  same(graph_product(parse_graph("a=a,b=b,c=c; a->b, b->c"), parse_graph("d=d,e=e; d->e")),
       parse_combo<OrientedGraph>("(" + path + "a->d) + (" + path + "a->e) + (" + path + "b->d) + (" + path +
                                  "b->e) + (" + path + "c->d) + (" + path + "c->e)"),
       "(a->b->c) * (d->e)");
  return {2, "reference expansions term for term", tally.failures == 0, tally.summary()};
}

namespace detail {

template <ShapeBasis Basis>
void agreement(const Multidegree& d, Tally& tally) {
  const std::vector<Basis> shapes = basis_of<Basis>(d);
  RecursivePairing<Basis> recursive;
  Expander<Basis> expansion;
  std::vector<Scalar> factors;
  for (const Basis& s : shapes) factors.emplace_back(symmetry_factor(s));
  for (const LieExpr& l : spanning_brackets(d).brackets) {
    const LinearCombo<Basis>& e = expansion(l);
    for (std::size_t k = 0; k < shapes.size(); ++k) {
      const Basis& s = shapes[k];
      const Scalar a = factors[k] * e.coefficient_of(s);
      const Scalar b = recursive(s, l);
      const Scalar c = pair_sigma(s, l);
      if (a == b && b == c) {
        ++tally.checks;
      } else {
        tally.check(false, std::string(to_string(side_of<Basis>::value)) + " " + to_text(s) + " vs " + l.text());
      }
    }
  }
}

}  // namespace detail

inline CriterionResult algorithm_agreement() {
  detail::Tally tally;
  for (int w = 1; w <= 6; ++w) {
    for (const Multidegree& d : multidegrees_of_weight(detail::abc(), w)) {
      detail::agreement<Word>(d, tally);
      detail::agreement<RootedTree>(d, tally);
      detail::agreement<OrientedGraph>(d, tally);
    }
  }
  const bool ok = tally.failures == 0 && tally.checks >= 10000;
  return {3, "expand = recursive = sigma, weight <= 6 over {a,b,c}", ok, tally.summary()};
}

namespace detail {

template <ShapeBasis Basis>
void cobracket_compatibility(random::Engine& rng, int trials, Tally& tally, std::size_t& nonzero) {
  for (int t = 0; t < trials; ++t) {
    const LieExpr x = random::bracket(rng, random::letters(rng, abc(), random::uniform(rng, 1, 3)));
    const LieExpr y = random::bracket(rng, random::letters(rng, abc(), random::uniform(rng, 1, 3)));
    std::vector<Generator> labels = x.leaves();
    for (const Generator& g : y.leaves()) labels.push_back(g);
    const LinearCombo<Basis> phi = random::combo<Basis>(rng, labels, 4);
    const Scalar lhs = pair_expand(phi, LinearCombo<LieExpr>(bracket(x, y)));
    Scalar rhs = 0;
    for (const auto& [factors, c] : cobracket(phi)) {
      rhs += c * pair_expand(LinearCombo<Basis>(factors.first), LinearCombo<LieExpr>(x)) *
             pair_expand(LinearCombo<Basis>(factors.second), LinearCombo<LieExpr>(y));
    }
    if (lhs != 0) ++nonzero;
    tally.check(lhs == rhs, to_text(phi) + " vs [" + x.text() + "," + y.text() + "]");
  }
}

}  // namespace detail

inline CriterionResult cobracket_compatibility(std::uint64_t seed = 20240611) {
  random::Engine rng(seed);
  detail::Tally tally;
  std::size_t nonzero = 0;
  detail::cobracket_compatibility<Word>(rng, 500, tally, nonzero);
  detail::cobracket_compatibility<RootedTree>(rng, 500, tally, nonzero);
  detail::cobracket_compatibility<OrientedGraph>(rng, 500, tally, nonzero);
  return {4, "cobracket compatibility, 500 random triples per side", tally.failures == 0,
          tally.summary() + ", " + std::to_string(nonzero) + " nonzero pairings"};
}

inline CriterionResult factorization() {
  detail::Tally tally;
  Expander<Word> ea;
  Expander<RootedTree> ep;
  Expander<OrientedGraph> eg;
  const std::vector<Generator> ab{Generator("a"), Generator("b")};
  for (int n = 1; n <= 6; ++n) {
    for (const Multidegree& d : multidegrees_of_weight(ab, n)) {
      const auto brackets = spanning_brackets(d).brackets;
      for (const Word& w : words_of(d)) {
        const RootedTree t = i_prelie(w);
        const OrientedGraph g = i_graph(t);
        for (const LieExpr& l : brackets) {
          const Scalar a = ea(l).coefficient_of(w);
          tally.check(a == ep(l).coefficient_of(t) && a == eg(l).coefficient_of(g), w.to_string() + " vs " + l.text());
        }
      }
    }
  }
  return {5, "eta_A = eta_G i_G i_p on words of length <= 6 over {a,b}", tally.failures == 0, tally.summary()};
}

inline CriterionResult kernel_suite(std::uint64_t seed = 7) {
  detail::Tally tally;
  const std::vector<Generator> a_b = parse_alphabet("a,b"), a_b_c = parse_alphabet("a,b,c");
  auto in_kernel = [&](const auto& dual, const std::string& what) { tally.check(kernel_member(dual), what); };

  for (const auto& k : kernel_generators<RootedTree>(a_b)) in_kernel(k, "anti-symmetry " + to_text(k));
  for (const auto& k : kernel_generators<RootedTree>(a_b_c)) in_kernel(k, "tree generator " + to_text(k));
  for (const auto& k : kernel_generators<OrientedGraph>(a_b)) in_kernel(k, "arrow reversing " + to_text(k));
  for (const auto& k : kernel_generators<OrientedGraph>(a_b_c)) in_kernel(k, "graph Arnold " + to_text(k));

  const char* displays[] = {
      "a(b(c)) - c(b(a))",
      "a(b(c)) + a(c(b)) - a(b,c)",
      "a(b,c) + b(a,c) + c(a,b)",
      "a(b(c(d))) + b(a,c(d))",
      "a(b(c(d))) + b(c(a,d)) + c(a(b),d)",
      "a(b(c(d))) - c(b(a),d)",
      "a(b(c(d))) + a(c(b,d)) - a(b,c(d))",
      "a(b,c(d)) + b(a,c(d)) + c(a,b,d)",
      "a(b(c(d))) + d(c(b(a)))",
  };
  for (const char* text : displays) in_kernel(parse_combo<RootedTree>(text), text);

  // the weight-4 displays also arise by grafting d above c
  for (const auto& k : kernel_generators<RootedTree>(a_b_c)) {
    const auto grafted = graft_kernel(k, parse_tree("d"), GraftAtLabel{Generator("c")});
    in_kernel(grafted, "grafted " + to_text(grafted));
  }

  std::size_t shuffles = 0;
  for (int total = 2; total <= 6; ++total) {
    for (int p = 1; p < total; ++p) {
      for (const Multidegree& du : multidegrees_of_weight(a_b, p)) {
        for (const Word& u : words_of(du)) {
          for (const Multidegree& dv : multidegrees_of_weight(a_b, total - p)) {
            for (const Word& v : words_of(dv)) {
              in_kernel(shuffle(u, v), "shuffle " + u.to_string() + " " + v.to_string());
              ++shuffles;
            }
          }
        }
      }
    }
  }
  in_kernel(parse_combo<Word>("a1 a2 a3 a4 a5 - a5 a4 a3 a2 a1"), "a1..a5 - a5..a1");

  random::Engine rng(seed);
  std::size_t controls = 0;
  auto control = [&](const auto& dual) {
    ++controls;
    tally.check(!kernel_member(dual), "control " + to_text(dual) + " accepted");
  };
  for (int t = 0; t < 100; ++t) {
    const auto labels = detail::first_letters(random::uniform(rng, 2, 5));
    control(LinearCombo<Word>(random::shape<Word>(rng, labels)));
    control(LinearCombo<RootedTree>(random::shape<RootedTree>(rng, labels)));
    control(LinearCombo<OrientedGraph>(random::shape<OrientedGraph>(rng, labels)));
  }
  return {6, "kernel membership suite", tally.failures == 0,
          tally.summary() + " (" + std::to_string(shuffles) + " shuffles, " + std::to_string(controls) + " controls)"};
}

inline CriterionResult long_graph_normal_form(std::uint64_t seed = 11) {
  detail::Tally tally;
  const Generator base("a");
  RecursivePairing<OrientedGraph> pair;
  for (int n = 1; n <= 6; ++n) {
    const auto labels = detail::first_letters(n);
    const std::vector<Generator> rest(labels.begin() + 1, labels.end());
    const auto brackets = left_normed_from(base, rest);
    for (const LieExpr& row : brackets) {
      const OrientedGraph path = long_graph(row.leaves());
      for (const LieExpr& col : brackets) {
        const Scalar expected = row.text() == col.text() ? 1 : 0;
        tally.check(pair(path, col) == expected, path.to_string() + " vs " + col.text());
      }
    }
  }
  random::Engine rng(seed);
  for (int t = 0; t < 200; ++t) {
    const auto labels = detail::first_letters(random::uniform(rng, 1, 5));
    const auto gamma = random::combo<OrientedGraph>(rng, labels, 3);
    tally.check(kernel_member(gamma - long_graph_reduce(gamma, base)), "residual of " + to_text(gamma));
  }
  return {7, "long-graph normal form", tally.failures == 0, tally.summary()};
}

inline CriterionResult rank_audit() {
  detail::Tally tally;
  for (int w = 1; w <= 6; ++w) {
    for (const Multidegree& d : multidegrees_of_weight(detail::abc(), w)) {
      const Integer witt = detail::witt_dimension(d);
      const std::size_t a = lie_dual_rank<Word>(d), p = lie_dual_rank<RootedTree>(d), g = lie_dual_rank<OrientedGraph>(d);
      tally.check(witt == a && witt == p && witt == g, d.to_string() + ": ranks " + std::to_string(a) + "/" +
                                                           std::to_string(p) + "/" + std::to_string(g) + ", Witt " +
                                                           witt.str());
    }
  }
  return {8, "rank audit against Lyndon counts", tally.failures == 0, tally.summary()};
}

inline CriterionResult operad_checks(std::uint64_t seed = 3) {
  detail::Tally tally;
  for (int n = 1; n <= 5; ++n) {
    Integer np = 1, cayley = 1;
    for (int k = 0; k < n - 1; ++k) np *= n;
    for (int k = 0; k + 2 < n; ++k) cayley *= n;
    if (n == 1) cayley = 1;
    cayley *= Integer(1) << (n - 1);
    tally.check(Integer(dims(Family::assoc, n)) == detail::factorial(n), "dims(assoc," + std::to_string(n) + ")");
    tally.check(Integer(dims(Family::prelie, n)) == np, "dims(prelie," + std::to_string(n) + ")");
    tally.check(Integer(dims(Family::graph, n)) == cayley, "dims(graph," + std::to_string(n) + ")");
  }
  random::Engine rng(seed);
  auto absorb = [&](const AxiomReport& r, const std::string& what) {
    tally.checks += r.checks;
    tally.failures += r.failures;
    if (r.failures && tally.notes.size() < 3) tally.notes.push_back(what + ": " + r.first_failure);
  };
  absorb(check_axioms<Word>(rng, 25), "assoc axioms");
  absorb(check_axioms<LieExpr>(rng, 25), "lie axioms");
  absorb(check_axioms<RootedTree>(rng, 25), "prelie axioms");
  absorb(check_axioms<OrientedGraph>(rng, 25), "graph axioms");
  absorb(check_quotients_commute(rng, 25), "quotients commute");
  absorb(check_envelope_factorization(4), "envelope factorization");
  const std::size_t bin = binary_generated_dim(Family::graph, 3), full = dims(Family::graph, 3);
  tally.check(bin < full, "binary_generated_dim(graph,3) = " + std::to_string(bin));
  return {9, "operads", tally.failures == 0,
          tally.summary() + ", binary-generated graph(3) = " + std::to_string(bin) + " of " + std::to_string(full)};
}

namespace detail {

template <class T>
void round_trip(const T& value, Tally& tally) {
  const std::string text = to_text(value);
  bool ok = false;
  try {
    if constexpr (std::is_same_v<T, LieExpr> || std::is_same_v<T, Word> || std::is_same_v<T, RootedTree> ||
                  std::is_same_v<T, OrientedGraph>) {
      ok = parse_shape<T>(text) == value;
    } else {
      ok = parse_combo<typename T::basis_type>(text) == value;
    }
  } catch (const Error&) {
    ok = false;
  }
  tally.check(ok, "round trip of " + text);
}

}  // namespace detail

inline CriterionResult cli_golden(const CliRunner& run, std::uint64_t seed = 5) {
  detail::Tally tally;
  struct Golden {
    std::vector<std::string> args;
    std::string expected;
  };
  const Golden goldens[] = {
      {{"pair", "--algo", "expand", "--side", "assoc", "abbba", "[[[b,a],b],[a,b]]"}, "-2\n"},
      {{"expand", "--side", "prelie", "[[a,b],c]"}, "a(b(c)) + a(b,c) - b(a(c)) - b(a,c) - c(a(b)) + c(b(a))\n"},
      {{"kernel-check", "--side", "graph", "1*(v1=a,v2=b; v1->v2) + 1*(v1=a,v2=b; v2->v1)"}, "true\n"},
  };
  for (const Golden& g : goldens) {
    std::ostringstream out, err;
    const int code = run(g.args, out, err);
    std::string shown = out.str();
    if (!shown.empty() && shown.back() == '\n') shown.pop_back();
    tally.check(code == 0 && out.str() == g.expected, g.args.front() + " printed '" + shown + "'" + err.str());
  }

  random::Engine rng(seed);
  const std::vector<Generator> single = parse_alphabet("a,b,c");
  const std::vector<Generator> multi = parse_alphabet("x1,x2,foo");
  for (int t = 0; t < 1000; ++t) {
    const auto& alphabet = t % 2 ? single : multi;
    const auto labels = random::letters(rng, alphabet, random::uniform(rng, 1, 5));
    switch (t % 8) {
      case 0: detail::round_trip(random::shape<LieExpr>(rng, labels), tally); break;
      case 1: detail::round_trip(random::shape<Word>(rng, labels), tally); break;
      case 2: detail::round_trip(random::shape<RootedTree>(rng, labels), tally); break;
      case 3: detail::round_trip(random::shape<OrientedGraph>(rng, labels), tally); break;
      case 4: detail::round_trip(random::combo<LieExpr>(rng, labels), tally); break;
      case 5: detail::round_trip(random::combo<Word>(rng, labels), tally); break;
      case 6: detail::round_trip(random::combo<RootedTree>(rng, labels), tally); break;
      default: detail::round_trip(random::combo<OrientedGraph>(rng, labels), tally); break;
    }
  }
  return {10, "CLI goldens and parse/print round trip", tally.failures == 0, tally.summary()};
}

/// Runs every criterion in order.
inline std::vector<CriterionResult> run_all(const CliRunner& run) {
  return {worked_values(),        reference_expansions(),      algorithm_agreement(), cobracket_compatibility(),
          factorization(),       kernel_suite(),          long_graph_normal_form(), rank_audit(),
          operad_checks(),       cli_golden(run)};
}

inline void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
  for (const CriterionResult& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " (" << r.detail << ")\n";
  }
}

}  // namespace liecoalg::acceptance

#endif  // LIECOALG_ACCEPTANCE_HPP
