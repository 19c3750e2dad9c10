#ifndef LIECOALG_WORD_HPP
#define LIECOALG_WORD_HPP

#include <compare>
#include <string>
#include <vector>

#include "liecoalg/generator.hpp"

namespace liecoalg {

/// A non-empty word in the generators: a basis element of the free
/// nonunital associative algebra.
class Word {
 public:
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("a word must have at least one letter");
  }
  explicit Word(const Generator& g) : letters_{g} {}

  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  /// Juxtaposed when every generator is a single character, otherwise
  /// whitespace-separated.
  std::string to_string() const {
    bool single = true;
    for (const Generator& g : letters_) single = single && g.name().size() == 1;
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!single && i > 0) s += ' ';
      s += letters_[i].name();
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Generator> letters_;
};

inline Multidegree multidegree(const Word& w) { return Multidegree::of_labels(w.letters()); }
inline std::size_t weight(const Word& w) { return w.size(); }
inline std::string shape_key(const Word& w) {
  std::string s;
  for (const Generator& g : w.letters()) {
    s += g.name();
    s += ' ';
  }
  return s;
}

}  // namespace liecoalg

#endif  // LIECOALG_WORD_HPP
