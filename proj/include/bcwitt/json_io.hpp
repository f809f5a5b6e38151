#pragma once

// JSON encodings of every value type. Keys keep insertion order so the
// output is byte-stable. Readers throw std::invalid_argument on malformed
// input.
//
// Numbers: counts, exponents and small structural coefficients are written as
// JSON integers when they fit in 64 bits; computed values, series, ghosts and
// matrix entries are strings ("a" or "a/b"). Readers accept either form.

#include "bcwitt/dynamical.hpp"
#include "bcwitt/endo.hpp"
#include "bcwitt/equivariant.hpp"
#include "bcwitt/qz.hpp"
#include "bcwitt/torified.hpp"
#include "bcwitt/witt.hpp"
#include "bcwitt/zeta.hpp"

#include <json.hpp>

#include <set>
#include <vector>

namespace bcw::json {

using Json = nlohmann::ordered_json;

Json number_or_string(const Integer& z);
Json string_of(const Rational& r);
Rational read_rational(const Json& j);
Integer read_integer(const Json& j);
std::int64_t read_int64(const Json& j);

Json qz_to_json(const QZElement& a);
QZElement qz_from_json(const Json& j);
Json fraction_to_json(const QZFraction& r);
QZFraction fraction_from_json(const Json& j);

Json split_to_json(const SplitQZElement& s);
SplitQZElement split_from_json(const Json& j);
std::set<std::int64_t> primes_from_json(const Json& j);

/// {"trunc":N,"coeffs":[c_0..c_N]}; c_0 may be omitted on input.
Json witt_to_json(const WittVector& w);
WittVector witt_from_json(const Json& j);

/// {"num":[..],"den":[..]} ascending.
template <class Scalar>
Json rational_witt_to_json(const RationalWitt<Scalar>& r);
IntRationalWitt int_rational_witt_from_json(const Json& j);
RatRationalWitt rat_rational_witt_from_json(const Json& j);
bool is_rational_witt(const Json& j);

Json series_to_json(const WittVector& w);
template <class T>
Json ghost_to_json(const GhostVector<T>& g);
Json symbolic_ghost_to_json(const GhostVector<IntPolynomial>& g);
GhostVector<Rational> ghost_from_json(const Json& j);

Json torified_to_json(const TorifiedClass& c);
Json lclass_to_json(const LClass& c);
/// Accepts either {"T":[..]} or {"L":{..}} (the latter converted when asked).
bool is_lclass(const Json& j);
TorifiedClass torified_from_json(const Json& j);
LClass lclass_from_json(const Json& j);
Json leveled_to_json(const LeveledClass& x);
LeveledClass leveled_from_json(const Json& j);
std::vector<BBPiece> bb_pieces_from_json(const Json& j);

Json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
Json graded_to_json(const GradedEndoObject& g);
GradedEndoObject graded_from_json(const Json& j);

Json lefschetz_to_json(const LefschetzZeta& z);

Json action_to_json(const CyclicAction& a);
CyclicAction action_from_json(const Json& j);
Json relative_to_json(const RelativeObject& x);
RelativeObject relative_from_json(const Json& j);
bool is_relative(const Json& j);

Json polynomial_to_json(const IntPolynomial& p);

// template definitions

template <class Scalar>
Json rational_witt_to_json(const RationalWitt<Scalar>& r) {
  auto coeffs = [](const Polynomial<Scalar>& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
      const Rational q = scalar_cast<Rational>(c);
      out.push_back(is_integral(q) ? number_or_string(numerator_of(q)) : string_of(q));
    }
    return out;
  };
  Json out = Json::object();
  out["num"] = coeffs(r.num());
  out["den"] = coeffs(r.den());
  return out;
}

template <class T>
Json ghost_to_json(const GhostVector<T>& g) {
  Json out = Json::array();
  for (const auto& v : g.values) out.push_back(string_of(scalar_cast<Rational>(v)));
  return out;
}

}  // namespace bcw::json
