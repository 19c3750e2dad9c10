#ifndef LIECOALG_COMBO_HPP
#define LIECOALG_COMBO_HPP

#include <initializer_list>
#include <map>
#include <utility>

#include "liecoalg/scalar.hpp"
#include "liecoalg/generator.hpp"

namespace liecoalg {

/// Finitely supported exact-rational linear combination of canonical basis
/// shapes. Zero coefficients are never stored. Also used for dual
/// functionals: the starred basis is identified with the basis.
template <class Basis>
class LinearCombo {
 public:
  using basis_type = Basis;
  using container = std::map<Basis, Scalar>;
  using const_iterator = typename container::const_iterator;

  LinearCombo() = default;
  LinearCombo(const Basis& b) { terms_.emplace(b, Scalar(1)); }  // NOLINT: basis embeds
  LinearCombo(std::initializer_list<std::pair<Basis, Scalar>> terms) {
    for (const auto& [b, c] : terms) add_term(b, c);
  }

  static LinearCombo term(const Scalar& c, const Basis& b) {
    LinearCombo out;
    out.add_term(b, c);
    return out;
  }

  void add_term(const Basis& b, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coefficient_of(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const noexcept { return terms_; }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  LinearCombo& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= s;
    }
    return *this;
  }

  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator-(LinearCombo a) { return a *= Scalar(-1); }
  friend LinearCombo operator*(const Scalar& s, LinearCombo a) { return a *= s; }
  friend LinearCombo operator*(LinearCombo a, const Scalar& s) { return a *= s; }

  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

 private:
  container terms_;
};

/// Combination of ordered pairs; the first slot is the left tensor factor.
template <class Basis>
using TensorCombo = LinearCombo<std::pair<Basis, Basis>>;

/// The twist map tau(x ⊗ y) = y ⊗ x.
template <class Basis>
TensorCombo<Basis> swap_factors(const TensorCombo<Basis>& t) {
  TensorCombo<Basis> out;
  for (const auto& [p, c] : t) out.add_term({p.second, p.first}, c);
  return out;
}

template <class Basis>
LinearCombo<Basis> add(const LinearCombo<Basis>& a, const LinearCombo<Basis>& b) { return a + b; }
template <class Basis>
LinearCombo<Basis> negate(const LinearCombo<Basis>& a) { return -a; }
template <class Basis>
LinearCombo<Basis> scale(const Scalar& s, const LinearCombo<Basis>& a) { return s * a; }
template <class Basis>
Scalar coefficient_of(const LinearCombo<Basis>& a, const Basis& b) { return a.coefficient_of(b); }

/// Splits a combination into its multihomogeneous components.
template <class Basis>
std::map<Multidegree, LinearCombo<Basis>> split_by_multidegree(const LinearCombo<Basis>& a) {
  std::map<Multidegree, LinearCombo<Basis>> out;
  for (const auto& [b, c] : a) out[multidegree(b)].add_term(b, c);
  return out;
}

/// Multidegree of a homogeneous combination; throws if the combination is
/// empty or mixes multidegrees.
template <class Basis>
Multidegree multidegree_of(const LinearCombo<Basis>& a) {
  if (a.empty()) throw Error("the zero combination has no multidegree");
  auto it = a.begin();
  Multidegree d = multidegree(it->first);
  for (++it; it != a.end(); ++it) {
    if (multidegree(it->first) != d) throw Error("combination is not homogeneous");
  }
  return d;
}

/// Linear extension of a basis-level map `f : Basis -> LinearCombo<Out>`.
template <class Out, class Basis, class F>
LinearCombo<Out> extend_linearly(const LinearCombo<Basis>& a, F&& f) {
  LinearCombo<Out> out;
  for (const auto& [b, c] : a) {
    LinearCombo<Out> image = f(b);
    for (const auto& [o, d] : image) out.add_term(o, c * d);
  }
  return out;
}

}  // namespace liecoalg

#endif  // LIECOALG_COMBO_HPP
