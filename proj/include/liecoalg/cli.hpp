#ifndef LIECOALG_CLI_HPP
#define LIECOALG_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "liecoalg/acceptance.hpp"
#include "liecoalg/json_io.hpp"

namespace liecoalg {

enum ExitCode : int { exit_ok = 0, exit_domain_error = 1, exit_parse_error = 2 };

namespace cli_detail {

/// Calls f with a value-initialized shape of the side's basis type.
template <class F>
decltype(auto) with_side(Side side, F&& f) {
  switch (side) {
    case Side::assoc: return f(Word(Generator("a")));
    case Side::prelie: return f(RootedTree(Generator("a")));
    case Side::graph: break;
  }
  return f(OrientedGraph(Generator("a")));
}

template <class F>
decltype(auto) with_family(Family family, F&& f) {
  switch (family) {
    case Family::assoc: return f(Word(Generator("a")));
    case Family::lie: return f(LieExpr(Generator("a")));
    case Family::prelie: return f(RootedTree(Generator("a")));
    case Family::graph: break;
  }
  return f(OrientedGraph(Generator("a")));
}

inline const std::map<std::string, Side>& side_names() {
  static const std::map<std::string, Side> m{{"assoc", Side::assoc}, {"prelie", Side::prelie}, {"graph", Side::graph}};
  return m;
}

inline const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m{
      {"assoc", Family::assoc}, {"lie", Family::lie}, {"prelie", Family::prelie}, {"graph", Family::graph}};
  return m;
}

/// "a:2,b:1" or a word-like letter list "aab".
inline Multidegree parse_multidegree(const std::string& text) {
  if (text.find(':') == std::string::npos) return multidegree(parse_word(text));
  Multidegree d;
  detail::Cursor in(text);
  do {
    Generator g(in.identifier());
    in.expect(':');
    const Scalar k = detail::coefficient(in);
    if (!is_integer(k) || k < 1) in.fail("expected a positive count");
    d.add(g, static_cast<int>(boost::multiprecision::numerator(k)));
  } while (in.accept(','));
  in.finish();
  return d;
}

class Printer {
 public:
  Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  void set_json(bool json) { json_ = json; }

  template <class T>
  void combo(const T& value) {
    if (json_) {
      out_ << to_json(value).dump() << "\n";
    } else {
      out_ << to_text(value) << "\n";
    }
  }
  void scalar(const Scalar& s) {
    if (json_) {
      out_ << nlohmann::json{{"value", to_string(s)}}.dump() << "\n";
    } else {
      out_ << to_string(s) << "\n";
    }
  }
  void integer(std::size_t n) {
    if (json_) {
      out_ << nlohmann::json{{"value", n}}.dump() << "\n";
    } else {
      out_ << n << "\n";
    }
  }
  void boolean(bool b) {
    if (json_) {
      out_ << nlohmann::json{{"value", b}}.dump() << "\n";
    } else {
      out_ << (b ? "true" : "false") << "\n";
    }
  }
  template <class T>
  void list(const std::vector<T>& items) {
    if (json_) {
      nlohmann::json arr = nlohmann::json::array();
      for (const T& x : items) arr.push_back(to_json(x));
      out_ << arr.dump() << "\n";
    } else {
      for (const T& x : items) out_ << to_text(x) << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool json_;
};

}  // namespace cli_detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Lie coalgebra pairings on words, rooted trees and oriented graphs", "liecoalg"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  Side side = Side::assoc;
  auto add_side = [&](CLI::App* sub) {
    sub->add_option("--side", side, "assoc, prelie or graph")
        ->required()
        ->transform(CLI::CheckedTransformer(side_names(), CLI::ignore_case));
  };

  std::function<void()> action;
  Printer print(out, false);

  // expand
  std::string lie_text;
  auto* expand_cmd = app.add_subcommand("expand", "enveloping polynomial of a Lie expression");
  add_side(expand_cmd);
  expand_cmd->add_option("lie", lie_text, "Lie expression or combination")->required();
  expand_cmd->callback([&] {
    action = [&] {
      const auto l = parse_combo<LieExpr>(lie_text);
      with_side(side, [&](auto tag) { print.combo(expand<decltype(tag)>(l)); });
    };
  });

  // pair
  std::string algo = "expand", dual_text;
  auto* pair_cmd = app.add_subcommand("pair", "pairing of a dual shape combination with a Lie expression");
  add_side(pair_cmd);
  pair_cmd->add_option("--algo", algo, "expand, recursive, sigma or rightnormed")
      ->check(CLI::IsMember({"expand", "recursive", "sigma", "rightnormed"}));
  pair_cmd->add_option("dual", dual_text, "dual combination")->required();
  pair_cmd->add_option("lie", lie_text, "Lie expression or combination")->required();
  pair_cmd->callback([&] {
    action = [&] {
      const auto l = parse_combo<LieExpr>(lie_text);
      with_side(side, [&](auto tag) {
        using Basis = decltype(tag);
        const auto dual = parse_combo<Basis>(dual_text);
        if (algo == "expand") {
          print.scalar(pair_expand(dual, l));
        } else if (algo == "recursive") {
          print.scalar(pair_recursive(dual, l));
        } else if (algo == "sigma") {
          print.scalar(pair_sigma(dual, l));
        } else if constexpr (std::is_same_v<Basis, Word>) {
          print.scalar(pair_right_normed(dual, l));
        } else {
          throw Error("the right-normed count is defined on the assoc side only");
        }
      });
    };
  });

  // product
  std::string kind, left_text, right_text;
  auto* product_cmd = app.add_subcommand("product", "product of two combinations");
  product_cmd->add_option("--kind", kind, "concat, shuffle, prelie or graph")
      ->required()
      ->check(CLI::IsMember({"concat", "shuffle", "prelie", "graph"}));
  product_cmd->add_option("a", left_text, "left factor")->required();
  product_cmd->add_option("b", right_text, "right factor")->required();
  product_cmd->callback([&] {
    action = [&] {
      if (kind == "concat" || kind == "shuffle") {
        const auto a = parse_combo<Word>(left_text), b = parse_combo<Word>(right_text);
        if (kind == "concat") {
          print.combo(product(a, b));
        } else {
          LinearCombo<Word> sum;
          for (const auto& [u, cu] : a) {
            for (const auto& [v, cv] : b) sum += (cu * cv) * shuffle(u, v);
          }
          print.combo(sum);
        }
      } else if (kind == "prelie") {
        print.combo(product(parse_combo<RootedTree>(left_text), parse_combo<RootedTree>(right_text)));
      } else {
        print.combo(product(parse_combo<OrientedGraph>(left_text), parse_combo<OrientedGraph>(right_text)));
      }
    };
  });

  // cobracket
  auto* cobracket_cmd = app.add_subcommand("cobracket", "anti-symmetrized cut coproduct of a dual combination");
  add_side(cobracket_cmd);
  cobracket_cmd->add_option("dual", dual_text, "dual combination")->required();
  cobracket_cmd->callback([&] {
    action = [&] {
      with_side(side, [&](auto tag) { print.combo(cobracket(parse_combo<decltype(tag)>(dual_text))); });
    };
  });

  // lyndon
  std::string alphabet_text;
  int max_len = 0;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon words in lexicographic order");
  lyndon_cmd->add_option("--alphabet", alphabet_text, "comma-separated generators")->required();
  lyndon_cmd->add_option("--max-len", max_len, "maximum length")->required()->check(CLI::Range(1, 12));
  lyndon_cmd->callback([&] {
    action = [&] { print.list(lyndon_words(parse_alphabet(alphabet_text), static_cast<std::size_t>(max_len))); };
  });

  // kernel-check
  auto* kernel_cmd = app.add_subcommand("kernel-check", "is the dual combination in the kernel of eta");
  add_side(kernel_cmd);
  kernel_cmd->add_option("dual", dual_text, "dual combination")->required();
  kernel_cmd->callback([&] {
    action = [&] {
      with_side(side, [&](auto tag) { print.boolean(kernel_member(parse_combo<decltype(tag)>(dual_text))); });
    };
  });

  // reduce-long
  std::string base_text;
  auto* reduce_cmd = app.add_subcommand("reduce-long", "long-graph normal form of a graph dual");
  reduce_cmd->add_option("--base", base_text, "generator at the start of every long graph")->required();
  reduce_cmd->add_option("dual", dual_text, "graph dual combination")->required();
  reduce_cmd->callback([&] {
    action = [&] { print.combo(long_graph_reduce(parse_combo<OrientedGraph>(dual_text), parse_generator(base_text))); };
  });

  // rank
  std::string multidegree_text;
  auto* rank_cmd = app.add_subcommand("rank", "rank of the pairing matrix of a multidegree");
  add_side(rank_cmd);
  rank_cmd->add_option("multidegree", multidegree_text, "e.g. a:2,b:1 or aab")->required();
  rank_cmd->callback([&] {
    action = [&] { print.integer(lie_dual_rank(side, parse_multidegree(multidegree_text))); };
  });

  // operad
  auto* operad_cmd = app.add_subcommand("operad", "arity-graded operads on labels x1..xn");
  operad_cmd->require_subcommand(1);
  Family family = Family::assoc;
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family, "assoc, lie, prelie or graph")
        ->required()
        ->transform(CLI::CheckedTransformer(family_names(), CLI::ignore_case));
  };
  int position = 1, n = 0, trials = 25;
  std::uint64_t seed = 1;
  bool binary = false;
  auto* compose_cmd = operad_cmd->add_subcommand("compose", "partial composition x o_i y");
  add_family(compose_cmd);
  compose_cmd->add_option("x", left_text, "element of arity n")->required();
  compose_cmd->add_option("i", position, "slot")->required();
  compose_cmd->add_option("y", right_text, "element of arity m")->required();
  compose_cmd->callback([&] {
    action = [&] {
      with_family(family, [&](auto tag) {
        using Shape = decltype(tag);
        auto element = [](const std::string& text) {
          const auto value = parse_combo<Shape>(text);
          if (value.empty()) throw Error("operad elements must be nonzero to fix their arity");
          return OperadElement<Shape>(static_cast<int>(weight(value.begin()->first)), value);
        };
        print.combo(compose(element(left_text), position, element(right_text)).value());
      });
    };
  });
  auto* dims_cmd = operad_cmd->add_subcommand("dims", "dimension of arity n");
  add_family(dims_cmd);
  dims_cmd->add_option("n", n, "arity")->required();
  dims_cmd->add_flag("--binary", binary, "dimension of the part generated by arity 2");
  dims_cmd->callback([&] {
    action = [&] { print.integer(binary ? binary_generated_dim(family, n) : dims(family, n)); };
  });
  auto* axioms_cmd = operad_cmd->add_subcommand("check-axioms", "composition laws on random elements");
  add_family(axioms_cmd);
  axioms_cmd->add_option("--trials", trials, "random triples")->check(CLI::Range(1, 10000));
  axioms_cmd->add_option("--seed", seed, "random seed");
  axioms_cmd->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      const AxiomReport r = with_family(family, [&](auto tag) { return check_axioms<decltype(tag)>(rng, trials); });
      if (json) {
        out << nlohmann::json{{"checks", r.checks}, {"failures", r.failures}, {"first_failure", r.first_failure}}.dump()
            << "\n";
      } else {
        out << (r.passed() ? "ok" : "FAILED") << " " << r.checks << " checks, " << r.failures << " failures";
        if (!r.passed()) out << " (" << r.first_failure << ")";
        out << "\n";
      }
      if (!r.passed()) throw Error("operad axioms violated");
    };
  });

  // selftest
  bool all_passed = true;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->callback([&] {
    action = [&] {
      const auto results = acceptance::run_all(run_cli);
      acceptance::print_results(results, out);
      for (const auto& r : results) all_passed = all_passed && r.passed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  }

  print.set_json(json);
  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
  return all_passed ? exit_ok : exit_domain_error;
}

}  // namespace liecoalg

#endif  // LIECOALG_CLI_HPP
