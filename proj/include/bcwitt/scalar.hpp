#pragma once

// Exact scalar types. Expression templates are switched off so the types
// behave as plain values inside Eigen matrices and std containers.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace bcw {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);
Integer ipow(const Integer& base, std::uint64_t exp);
Rational rpow(const Rational& base, std::uint64_t exp);

/// Converts between exact scalars; narrowing Rational -> Integer requires an
/// integral value.
template <class To, class From>
To scalar_cast(const From& x);

template <>
inline Integer scalar_cast<Integer, Integer>(const Integer& x) { return x; }
template <>
inline Rational scalar_cast<Rational, Rational>(const Rational& x) { return x; }
template <>
inline Rational scalar_cast<Rational, Integer>(const Integer& x) { return Rational(x); }
template <>
Integer scalar_cast<Integer, Rational>(const Rational& x);

}  // namespace bcw
