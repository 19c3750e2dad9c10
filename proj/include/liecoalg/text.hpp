#ifndef LIECOALG_TEXT_HPP
#define LIECOALG_TEXT_HPP

// Text syntax:
//   lie     [a,[b,c]]
//   word    abbba | x1 x2 x3 | (x1)
//   tree    a(b,c(d))
//   graph   v1=a,v2=b,v3=c; v1->v2, v3->v1
//   combo   2*ab - 3/2*ba + (v1=a;)        graph terms parenthesized

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liecoalg/terms.hpp"

namespace liecoalg {

// ---------------------------------------------------------------------------
// Printing

inline std::string to_text(const Generator& g) { return g.name(); }
inline std::string to_text(const Word& w) {
  if (w.size() == 1 && w[0].name().size() > 1) return "(" + w[0].name() + ")";
  return w.to_string();
}
inline std::string to_text(const RootedTree& t) { return t.to_string(); }
inline std::string to_text(const OrientedGraph& g) { return g.to_string(); }
inline std::string to_text(const LieExpr& l) { return l.text(); }
inline std::string to_text(const Scalar& s) { return to_string(s); }

namespace detail {

inline std::string term_text(const OrientedGraph& g) { return "(" + g.to_string() + ")"; }
template <class Basis>
std::string term_text(const Basis& b) {
  return to_text(b);
}
template <class Basis>
std::string term_text(const std::pair<Basis, Basis>& p) {
  return term_text(p.first) + " ⊗ " + term_text(p.second);
}

}  // namespace detail

/// Terms in canonical order, unit coefficients omitted, "0" when empty.
template <class Basis>
std::string to_text(const LinearCombo<Basis>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x) {
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += detail::term_text(b);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (pos_ == start) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }
  void finish() {
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }
  std::size_t position() const noexcept { return offset_ + pos_; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

inline LieExpr lie(Cursor& in) {
  if (in.accept('[')) {
    LieExpr left = lie(in);
    in.expect(',');
    LieExpr right = lie(in);
    in.expect(']');
    return bracket(left, right);
  }
  return LieExpr(Generator(in.identifier()));
}

inline RootedTree tree(Cursor& in) {
  Generator label(in.identifier());
  std::vector<RootedTree> kids;
  if (in.accept('(')) {
    do {
      kids.push_back(tree(in));
    } while (in.accept(','));
    in.expect(')');
  }
  return RootedTree(label, std::move(kids));
}

inline OrientedGraph graph(Cursor& in) {
  std::vector<std::string> names;
  std::vector<Generator> labels;
  auto vertex = [&](const std::string& name) {
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (names[v] == name) return static_cast<int>(v);
    }
    return -1;
  };
  do {
    const std::size_t at = in.position();
    std::string name = in.identifier();
    if (vertex(name) >= 0) throw ParseError("vertex " + name + " declared twice", at);
    in.expect('=');
    names.push_back(std::move(name));
    labels.emplace_back(in.identifier());
  } while (in.accept(','));
  std::vector<Edge> edges;
  if (in.accept(';')) {
    const char next = in.peek();
    if (next != '\0' && next != ')') {
      do {
        auto endpoint = [&]() {
          const std::size_t at = in.position();
          const std::string name = in.identifier();
          const int v = vertex(name);
          if (v < 0) throw ParseError("undeclared vertex " + name, at);
          return v;
        };
        const int s = endpoint();
        in.expect("->");
        const int t = endpoint();
        edges.emplace_back(s, t);
      } while (in.accept(','));
    }
  }
  return OrientedGraph(std::move(labels), std::move(edges));
}

inline bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

inline Word word(Cursor& in, std::string_view stop) {
  std::vector<Generator> letters;
  if (in.accept('(')) {
    do {
      letters.emplace_back(in.identifier());
    } while (in.accept(',') || (in.peek() != ')' && in.peek() != '\0'));
    in.expect(')');
    return Word(std::move(letters));
  }
  std::vector<std::pair<std::string, std::size_t>> tokens;
  while (true) {
    const char c = in.peek();
    if (c == '\0' || stop.find(c) != std::string_view::npos) break;
    const std::size_t at = in.position();
    tokens.emplace_back(in.identifier(), at);
    in.accept(',');
  }
  if (tokens.empty()) in.fail("expected a word");
  if (tokens.size() == 1) {
    const auto& [token, at] = tokens.front();
    for (std::size_t k = 0; k < token.size(); ++k) {
      if (!is_letter(token[k])) {
        throw ParseError("juxtaposed words take single-letter generators; separate multi-character names by spaces",
                         at + k);
      }
      letters.emplace_back(std::string(1, token[k]));
    }
  } else {
    for (const auto& [token, at] : tokens) letters.emplace_back(token);
  }
  return Word(std::move(letters));
}

inline Scalar coefficient(Cursor& in) {
  std::string digits;
  auto read = [&]() {
    in.skip_space();
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      d += in.peek();
      in.accept(in.peek());
    }
    return d;
  };
  const std::string num = read();
  if (in.accept('/')) {
    const std::size_t at = in.position();
    const std::string den = read();
    if (den.empty()) in.fail("expected a denominator");
    if (Integer(den) == 0) throw ParseError("zero denominator", at);
    return Scalar(Integer(num), Integer(den));
  }
  return Scalar(Integer(num));
}

template <class Basis>
Basis term(Cursor& in) {
  if constexpr (std::is_same_v<Basis, LieExpr>) {
    return lie(in);
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    return tree(in);
  } else if constexpr (std::is_same_v<Basis, Word>) {
    return word(in, "+-");
  } else {
    if (in.accept('(')) {
      OrientedGraph g = graph(in);
      in.expect(')');
      return g;
    }
    return graph(in);
  }
}

template <class Basis>
LinearCombo<Basis> combo(Cursor& in) {
  LinearCombo<Basis> out;
  if (in.peek() == '0') {
    Cursor probe = in;
    probe.accept('0');
    if (probe.at_end()) {
      in = probe;
      return out;
    }
  }
  bool first = true;
  while (!in.at_end()) {
    Scalar sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    Scalar c = 1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      c = coefficient(in);
      in.expect('*');
    }
    out.add_term(term<Basis>(in), sign * c);
    first = false;
  }
  if (first) in.fail("expected a term");
  return out;
}

template <class T, class F>
T parse_all(std::string_view text, F&& f) {
  Cursor in(text);
  T value = f(in);
  in.finish();
  return value;
}

}  // namespace detail

inline LieExpr parse_lie(std::string_view text) {
  return detail::parse_all<LieExpr>(text, [](detail::Cursor& in) { return detail::lie(in); });
}
inline Word parse_word(std::string_view text) {
  return detail::parse_all<Word>(text, [](detail::Cursor& in) { return detail::word(in, ""); });
}
inline RootedTree parse_tree(std::string_view text) {
  return detail::parse_all<RootedTree>(text, [](detail::Cursor& in) { return detail::tree(in); });
}
inline OrientedGraph parse_graph(std::string_view text) {
  return detail::parse_all<OrientedGraph>(text, [](detail::Cursor& in) { return detail::term<OrientedGraph>(in); });
}
inline Generator parse_generator(std::string_view text) {
  return detail::parse_all<Generator>(text, [](detail::Cursor& in) { return Generator(in.identifier()); });
}

template <class Basis>
LinearCombo<Basis> parse_combo(std::string_view text) {
  return detail::parse_all<LinearCombo<Basis>>(text, [](detail::Cursor& in) { return detail::combo<Basis>(in); });
}

template <class Basis>
Basis parse_shape(std::string_view text) {
  if constexpr (std::is_same_v<Basis, LieExpr>) {
    return parse_lie(text);
  } else if constexpr (std::is_same_v<Basis, Word>) {
    return parse_word(text);
  } else if constexpr (std::is_same_v<Basis, RootedTree>) {
    return parse_tree(text);
  } else {
    return parse_graph(text);
  }
}

inline std::vector<Generator> parse_alphabet(std::string_view text) {
  return detail::parse_all<std::vector<Generator>>(text, [](detail::Cursor& in) {
    std::vector<Generator> out;
    do {
      const std::size_t at = in.position();
      Generator g(in.identifier());
      if (std::find(out.begin(), out.end(), g) != out.end()) throw ParseError("repeated generator " + g.name(), at);
      out.push_back(std::move(g));
    } while (in.accept(','));
    return out;
  });
}

}  // namespace liecoalg

#endif  // LIECOALG_TEXT_HPP
