#ifndef LIECOALG_SCALAR_HPP
#define LIECOALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace liecoalg {

/// Exact rational coefficient. Always stored in lowest terms with a positive
/// denominator.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& s) {
  const Integer& num = boost::multiprecision::numerator(s);
  const Integer& den = boost::multiprecision::denominator(s);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Scalar& s) {
  return boost::multiprecision::denominator(s) == 1;
}

}  // namespace liecoalg

#endif  // LIECOALG_SCALAR_HPP
