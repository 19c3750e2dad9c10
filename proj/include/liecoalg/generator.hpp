#ifndef LIECOALG_GENERATOR_HPP
#define LIECOALG_GENERATOR_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "liecoalg/error.hpp"

namespace liecoalg {

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

/// A named basis element of V. Ordered lexicographically by name.
class Generator {
 public:
  explicit Generator(std::string name) : name_(std::move(name)) {
    if (!is_identifier(name_)) {
      throw Error("invalid generator name '" + name_ + "'");
    }
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

/// Generator-content multiset of a homogeneous element, kept as a sorted
/// list of (generator, count) with all counts positive.
class Multidegree {
 public:
  Multidegree() = default;

  template <class Range>
  static Multidegree of_labels(const Range& labels) {
    Multidegree d;
    for (const Generator& g : labels) d.add(g, 1);
    return d;
  }

  void add(const Generator& g, int count) {
    if (count == 0) return;
    auto it = std::lower_bound(counts_.begin(), counts_.end(), g,
                               [](const auto& entry, const Generator& key) {
                                 return entry.first < key;
                               });
    if (it != counts_.end() && it->first == g) {
      it->second += count;
      if (it->second == 0) counts_.erase(it);
    } else {
      counts_.insert(it, {g, count});
    }
  }

  Multidegree& operator+=(const Multidegree& other) {
    for (const auto& [g, c] : other.counts_) add(g, c);
    return *this;
  }
  friend Multidegree operator+(Multidegree a, const Multidegree& b) {
    a += b;
    return a;
  }

  int count(const Generator& g) const {
    for (const auto& [h, c] : counts_) {
      if (h == g) return c;
    }
    return 0;
  }

  int total() const {
    int t = 0;
    for (const auto& entry : counts_) t += entry.second;
    return t;
  }

  /// Labels with multiplicity, in generator order.
  std::vector<Generator> labels() const {
    std::vector<Generator> out;
    for (const auto& [g, c] : counts_) {
      for (int i = 0; i < c; ++i) out.push_back(g);
    }
    return out;
  }

  bool has_distinct_labels() const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](const auto& e) { return e.second == 1; });
  }

  const std::vector<std::pair<Generator, int>>& entries() const noexcept { return counts_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [g, c] : counts_) {
      if (!first) s += ",";
      first = false;
      s += g.name() + ":" + std::to_string(c);
    }
    return s + "}";
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<std::pair<Generator, int>> counts_;
};

}  // namespace liecoalg

#endif  // LIECOALG_GENERATOR_HPP
