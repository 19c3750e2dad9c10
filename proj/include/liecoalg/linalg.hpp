#ifndef LIECOALG_LINALG_HPP
#define LIECOALG_LINALG_HPP

#include <cstddef>
#include <map>

#include "liecoalg/combo.hpp"
#include "liecoalg/scalar.hpp"

namespace liecoalg {

/// Incremental row echelon form over the rationals for sparse vectors keyed
/// by any ordered type. Each stored row is normalized to 1 at its pivot and
/// has no entries below it.
template <class Key>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Scalar>;

  /// Reduces v against the stored rows; the result is zero iff v was in the span.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key pivot = it->first;
      const Scalar c = it->second;
      for (const auto& [k, x] : row->second) {
        Scalar& slot = v[k];
        slot -= c * x;
        if (slot == 0) v.erase(k);
      }
      it = v.upper_bound(pivot);
    }
    return v;
  }

  /// Adds v to the span; returns true iff the rank grew.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    const Scalar lead = v.begin()->second;
    for (auto& [k, x] : v) x /= lead;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<Key, Vector> rows_;
};

template <class Basis>
std::map<Basis, Scalar> to_vector(const LinearCombo<Basis>& x) {
  return std::map<Basis, Scalar>(x.begin(), x.end());
}

/// Dimension of the span of the given combinations.
template <class Basis, class Range>
std::size_t rank_of(const Range& combos) {
  SparseEchelon<Basis> echelon;
  for (const auto& x : combos) echelon.insert(to_vector(x));
  return echelon.rank();
}

}  // namespace liecoalg

#endif  // LIECOALG_LINALG_HPP
