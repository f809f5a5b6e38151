#include "bcwitt/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace bcw::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("key \"") + key + "\" must be an array");
  return a;
}

bool fits_int64(const Integer& z) {
  return z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max();
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const auto v = read_int64(x);
    if (v < 0) bad(std::string(what) + " entries must be nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

template <class Scalar>
Polynomial<Scalar> poly_from_json(const Json& j, const char* key) {
  std::vector<Scalar> out;
  for (const auto& c : array_field(j, key)) out.push_back(scalar_cast<Scalar>(read_rational(c)));
  return Polynomial<Scalar>(std::move(out));
}

template <class Scalar>
Matrix<Scalar> matrix_from_json(const Json& j) {
  const Json& rows = array_field(j, "rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) bad("matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = scalar_cast<Scalar>(read_rational(row[static_cast<std::size_t>(k)]));
  }
  return m;
}

}  // namespace

Json number_or_string(const Integer& z) {
  if (fits_int64(z)) return Json(z.convert_to<std::int64_t>());
  return Json(to_string(z));
}

Json string_of(const Rational& r) { return Json(to_string(r)); }

Rational read_rational(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected an integer or a \"num/den\" string, got " + j.dump());
}

Integer read_integer(const Json& j) {
  const Rational r = read_rational(j);
  if (!is_integral(r)) bad("expected an integer, got " + j.dump());
  return numerator_of(r);
}

std::int64_t read_int64(const Json& j) {
  const Integer z = read_integer(j);
  if (!fits_int64(z)) bad("integer out of range: " + j.dump());
  return z.convert_to<std::int64_t>();
}

Json fraction_to_json(const QZFraction& r) { return string_of(Rational(r.num(), r.den())); }

QZFraction fraction_from_json(const Json& j) {
  const Rational r = read_rational(j);
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  if (!fits_int64(den)) bad("denominator out of range: " + j.dump());
  const Integer reduced = ((num % den) + den) % den;
  return QZFraction(reduced.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

Json qz_to_json(const QZElement& a) {
  Json terms = Json::array();
  for (const auto& [r, c] : a.terms()) {
    Json t = Json::object();
    t["r"] = fraction_to_json(r);
    t["c"] = number_or_string(c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

QZElement qz_from_json(const Json& j) {
  QZElement out;
  for (const auto& t : array_field(j, "terms")) out.add_term(fraction_from_json(field(t, "r")), read_integer(field(t, "c")));
  return out;
}

std::set<std::int64_t> primes_from_json(const Json& j) {
  if (!j.is_array()) bad("primes must be an array");
  std::set<std::int64_t> out;
  for (const auto& p : j) out.insert(read_int64(p));
  return out;
}

Json split_to_json(const SplitQZElement& s) {
  Json primes = Json::array();
  for (auto p : s.primes()) primes.push_back(p);
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms()) {
    Json t = Json::object();
    t["F"] = fraction_to_json(key.first);
    t["coprime"] = fraction_to_json(key.second);
    t["c"] = number_or_string(c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["primes"] = std::move(primes);
  out["terms"] = std::move(terms);
  return out;
}

SplitQZElement split_from_json(const Json& j) {
  SplitQZElement::Terms terms;
  for (const auto& t : array_field(j, "terms")) {
    const SplitQZElement::Key key{fraction_from_json(field(t, "F")), fraction_from_json(field(t, "coprime"))};
    Integer& slot = terms[key];
    slot += read_integer(field(t, "c"));
    if (slot == 0) terms.erase(key);
  }
  return SplitQZElement(primes_from_json(field(j, "primes")), std::move(terms));
}

Json series_to_json(const WittVector& w) {
  Json out = Json::array();
  for (std::size_t i = 0; i <= w.trunc(); ++i) out.push_back(string_of(w.coeff(i)));
  return out;
}

Json witt_to_json(const WittVector& w) {
  Json out = Json::object();
  out["trunc"] = w.trunc();
  out["coeffs"] = series_to_json(w);
  return out;
}

WittVector witt_from_json(const Json& j) {
  const auto trunc = read_int64(field(j, "trunc"));
  if (trunc < 1) bad("trunc must be >= 1");
  const Json& coeffs = array_field(j, "coeffs");
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(read_rational(x));
  const auto n = static_cast<std::size_t>(trunc);
  if (c.size() == n + 1) {
    if (c.front() != 1) bad("Witt vectors have constant term 1");
    c.erase(c.begin());
  } else if (c.size() != n) {
    bad("coeffs must hold trunc or trunc+1 entries");
  }
  return WittVector(std::move(c));
}

bool is_rational_witt(const Json& j) { return j.is_object() && j.contains("num") && j.contains("den"); }

IntRationalWitt int_rational_witt_from_json(const Json& j) {
  return IntRationalWitt(poly_from_json<Integer>(j, "num"), poly_from_json<Integer>(j, "den"));
}

RatRationalWitt rat_rational_witt_from_json(const Json& j) {
  return RatRationalWitt(poly_from_json<Rational>(j, "num"), poly_from_json<Rational>(j, "den"));
}

Json symbolic_ghost_to_json(const GhostVector<IntPolynomial>& g) {
  Json out = Json::array();
  for (const auto& p : g.values) out.push_back(polynomial_to_json(p));
  return out;
}

GhostVector<Rational> ghost_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("ghost must be a nonempty array");
  GhostVector<Rational> g;
  for (const auto& x : j) g.values.push_back(read_rational(x));
  return g;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(string_of(Rational(c)));
  if (out.empty()) out.push_back("0");
  return out;
}

Json torified_to_json(const TorifiedClass& c) {
  Json coeffs = Json::array();
  for (const auto& a : c.poly().coeffs()) coeffs.push_back(number_or_string(a));
  if (coeffs.empty()) coeffs.push_back(0);
  Json out = Json::object();
  out["T"] = std::move(coeffs);
  return out;
}

Json lclass_to_json(const LClass& c) {
  Json terms = Json::object();
  for (const auto& [doubled, a] : c.doubled_terms()) terms[to_string(Rational(doubled, 2))] = number_or_string(a);
  Json out = Json::object();
  out["L"] = std::move(terms);
  return out;
}

bool is_lclass(const Json& j) { return j.is_object() && j.contains("L"); }

TorifiedClass torified_from_json(const Json& j) {
  if (is_lclass(j)) return l_to_t(lclass_from_json(j));
  std::vector<Integer> coeffs;
  for (const auto& x : array_field(j, "T")) coeffs.push_back(read_integer(x));
  return TorifiedClass(std::move(coeffs));
}

LClass lclass_from_json(const Json& j) {
  if (!is_lclass(j)) return t_to_l(torified_from_json(j));
  const Json& terms = field(j, "L");
  if (!terms.is_object()) bad("\"L\" must be an object keyed by exponent");
  LClass::Terms out;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const Rational e = parse_rational(it.key());
    const Rational doubled = e * 2;
    if (!is_integral(doubled)) bad("L exponents must be integers or half-integers, got " + it.key());
    const Integer d = numerator_of(doubled);
    if (!fits_int64(d)) bad("exponent out of range: " + it.key());
    out[d.convert_to<std::int64_t>()] += read_integer(it.value());
  }
  return LClass(std::move(out));
}

Json leveled_to_json(const LeveledClass& x) {
  Json out = Json::object();
  out["class"] = torified_to_json(x.cls);
  out["level"] = x.level;
  return out;
}

LeveledClass leveled_from_json(const Json& j) {
  const auto level = read_int64(field(j, "level"));
  if (level < 1) bad("level must be >= 1");
  return LeveledClass{torified_from_json(field(j, "class")), level};
}

std::vector<BBPiece> bb_pieces_from_json(const Json& j) {
  if (!j.is_array()) bad("pieces must be an array of {\"class\":…,\"dim\":d}");
  std::vector<BBPiece> out;
  for (const auto& p : j) {
    const auto d = read_int64(field(p, "dim"));
    if (d < 0) bad("fiber dimension must be >= 0");
    out.push_back(BBPiece{torified_from_json(field(p, "class")), static_cast<std::size_t>(d)});
  }
  return out;
}

Json rat_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(string_of(m(i, k)));
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["rows"] = std::move(rows);
  return out;
}

RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from_json<Rational>(j); }

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Integer>(j); }

Json graded_to_json(const GradedEndoObject& g) {
  Json out = Json::object();
  out["plus"] = rat_matrix_to_json(g.plus.matrix());
  out["minus"] = rat_matrix_to_json(g.minus.matrix());
  return out;
}

GradedEndoObject graded_from_json(const Json& j) {
  return {EndoObject(rat_matrix_from_json(field(j, "plus"))), EndoObject(rat_matrix_from_json(field(j, "minus")))};
}

Json lefschetz_to_json(const LefschetzZeta& z) {
  Json exps = Json::object();
  for (const auto& [d, s] : z.exponents) exps[std::to_string(d)] = number_or_string(s);
  Json out = Json::object();
  out["exponents"] = std::move(exps);
  return out;
}

Json action_to_json(const CyclicAction& a) {
  Json perm = Json::array();
  for (auto p : a.perm()) perm.push_back(p);
  Json out = Json::object();
  out["level"] = a.level();
  out["perm"] = std::move(perm);
  return out;
}

CyclicAction action_from_json(const Json& j) {
  return CyclicAction(read_int64(field(j, "level")), index_list(field(j, "perm"), "perm"));
}

Json relative_to_json(const RelativeObject& x) {
  Json map = Json::array();
  for (auto p : x.map()) map.push_back(p);
  Json out = Json::object();
  out["total"] = action_to_json(x.total());
  out["base"] = action_to_json(x.base());
  out["map"] = std::move(map);
  return out;
}

RelativeObject relative_from_json(const Json& j) {
  return RelativeObject(action_from_json(field(j, "total")), action_from_json(field(j, "base")),
                        index_list(field(j, "map"), "map"));
}

bool is_relative(const Json& j) { return j.is_object() && j.contains("total"); }

}  // namespace bcw::json
