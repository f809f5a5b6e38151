#include "bcwitt/cli.hpp"

#include "bcwitt/arith.hpp"
#include "bcwitt/errors.hpp"
#include "bcwitt/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace bcw {

namespace {

using json::Json;

constexpr std::size_t kDefaultTrunc = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Context {
 public:
  std::map<std::string, std::string> values;
  std::set<std::string> flags;
  std::size_t trunc = kDefaultTrunc;

  bool has(const std::string& name) const { return values.count(name) != 0; }
  bool flag(const std::string& name) const { return flags.count(name) != 0; }

  const std::string& raw(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw UsageError("missing required option --" + name);
    return it->second;
  }

  Json json(const std::string& name) const {
    try {
      return Json::parse(raw(name));
    } catch (const Json::parse_error& e) {
      throw UsageError("--" + name + ": invalid JSON (" + e.what() + ")");
    }
  }

  std::int64_t integer(const std::string& name) const {
    try {
      return json::read_int64(Json(raw(name)));
    } catch (const std::invalid_argument&) {
      throw UsageError("--" + name + ": expected an integer, got '" + raw(name) + "'");
    }
  }

  std::int64_t integer_or(const std::string& name, std::int64_t fallback) const {
    return has(name) ? integer(name) : fallback;
  }

  std::size_t positive(const std::string& name) const {
    const auto v = integer(name);
    if (v < 1) throw UsageError("--" + name + " must be >= 1");
    return static_cast<std::size_t>(v);
  }
};

using Handler = std::function<Json(const Context&)>;

struct Leaf {
  std::string group;
  std::string name;
  std::string help;
  std::vector<std::pair<std::string, std::string>> options;  // name, help
  std::vector<std::pair<std::string, std::string>> flags;
  bool uses_trunc = false;
  Handler handler;
};

// Witt arguments may be given truncated or in rational form; the latter is
// expanded to the requested truncation.
WittVector witt_arg(const Context& ctx, const std::string& name) {
  const Json j = ctx.json(name);
  if (json::is_rational_witt(j)) return json::rat_rational_witt_from_json(j).expand(ctx.trunc);
  return json::witt_from_json(j);
}

Json rational_function_to_json(const IntPolynomial& num, const IntPolynomial& den) {
  auto coeffs = [](const IntPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(json::number_or_string(c));
    if (out.empty()) out.push_back(0);
    return out;
  };
  Json out = Json::object();
  out["num"] = coeffs(num);
  out["den"] = coeffs(den);
  return out;
}

Json zeta_output(const Json& ghost, const WittVector& series) {
  Json out = Json::object();
  out["ghost"] = ghost;
  out["series"] = json::series_to_json(series);
  return out;
}

// Ghost generating series sum_m N_m t^m = sum_k a_k Li_{-k}(t) over the
// common denominator (1 - t)^{D+1}.
Json f1_log_derivative(const TorifiedClass& c) {
  if (c.is_zero()) return rational_function_to_json(IntPolynomial(), IntPolynomial::one());
  const auto top = static_cast<std::uint64_t>(c.degree());
  const IntPolynomial one_minus_t = IntPolynomial::one_minus(1);
  IntPolynomial num;
  for (std::uint64_t k = 0; k <= top; ++k) {
    if (c.coeff(k) == 0) continue;
    const auto li = polylog_rational(static_cast<std::int64_t>(k) + 1);
    num += li.num * pow(one_minus_t, top - k) * c.coeff(k);
  }
  return rational_function_to_json(num, pow(one_minus_t, top + 1));
}

Json qz_leaf_add(const Context& ctx) {
  return json::qz_to_json(json::qz_from_json(ctx.json("a")) + json::qz_from_json(ctx.json("b")));
}

Json equivariant_check(const Context& ctx) {
  const CyclicAction a = json::action_from_json(ctx.json("action"));
  const auto n_max = ctx.integer_or("n-max", 4);
  const auto k_max = ctx.integer_or("k-max", 32);
  if (n_max < 1 || k_max < 1) throw UsageError("--n-max and --k-max must be >= 1");
  const QZElement chi = euler_char(a);
  bool periodic_ok = true, euler_ok = true;
  std::int64_t cases = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const CyclicAction s = sigma_action(n, a);
    const CyclicAction v = verschiebung_action(n, a);
    euler_ok = euler_ok && euler_char(s) == sigma(n, chi) && euler_char(v) == rho(n, chi);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      ++cases;
      periodic_ok = periodic_ok && periodic_points(s, k) == periodic_points(a, n * k);
      std::vector<std::size_t> expected;
      if (k % n == 0)
        for (auto p : periodic_points(a, k / n))
          for (std::int64_t i = 0; i < n; ++i) expected.push_back(p * static_cast<std::size_t>(n) + static_cast<std::size_t>(i));
      std::sort(expected.begin(), expected.end());
      periodic_ok = periodic_ok && periodic_points(v, k) == expected;
    }
  }
  Json out = Json::object();
  out["periodic"] = periodic_ok;
  out["euler"] = euler_ok;
  out["cases"] = cases;
  return out;
}

std::vector<Leaf> leaves() {
  std::vector<Leaf> l;
  const std::pair<std::string, std::string> n{"n", "positive integer"};
  const std::pair<std::string, std::string> a{"a", "first operand (JSON)"};
  const std::pair<std::string, std::string> b{"b", "second operand (JSON)"};
  const std::pair<std::string, std::string> elem{"elem", "Z[Q/Z] element (JSON)"};
  const std::pair<std::string, std::string> w{"w", "Witt vector (JSON, truncated or rational form)"};
  const std::pair<std::string, std::string> cls{"class", "class (JSON, T or L basis)"};
  const std::pair<std::string, std::string> matrix{"matrix", "square matrix (JSON {\"rows\":…})"};
  const std::pair<std::string, std::string> action{"action", "action or relative object (JSON)"};

  // qz
  l.push_back({"qz", "sigma", "e(r) -> e(nr)", {n, elem}, {}, false, [](const Context& c) {
                 return json::qz_to_json(sigma(c.integer("n"), json::qz_from_json(c.json("elem"))));
               }});
  l.push_back({"qz", "rho", "sum over the n-th division points", {n, elem}, {}, false, [](const Context& c) {
                 return json::qz_to_json(rho(c.integer("n"), json::qz_from_json(c.json("elem"))));
               }});
  l.push_back({"qz", "mul", "convolution product", {a, b}, {}, false, [](const Context& c) {
                 return json::qz_to_json(json::qz_from_json(c.json("a")) * json::qz_from_json(c.json("b")));
               }});
  l.push_back({"qz", "add", "sum", {a, b}, {}, false, qz_leaf_add});
  l.push_back({"qz", "split", "decompose along a finite set of primes", {{"primes", "JSON array of primes"}, elem}, {}, false,
               [](const Context& c) {
                 return json::split_to_json(split(json::primes_from_json(c.json("primes")), json::qz_from_json(c.json("elem"))));
               }});
  l.push_back({"qz", "unsplit", "inverse of split", {{"split", "split element (JSON)"}}, {}, false, [](const Context& c) {
                 return json::qz_to_json(unsplit(json::split_from_json(c.json("split"))));
               }});
  l.push_back({"qz", "pi", "n pi_n", {n}, {}, false, [](const Context& c) { return json::qz_to_json(pi_n_times_n(c.integer("n"))); }});

  // witt
  l.push_back({"witt", "add", "Witt sum (series product)", {a, b}, {}, true, [](const Context& c) {
                 const Json ja = c.json("a"), jb = c.json("b");
                 if (json::is_rational_witt(ja) && json::is_rational_witt(jb))
                   return json::rational_witt_to_json(
                       rational_add(json::rat_rational_witt_from_json(ja), json::rat_rational_witt_from_json(jb)));
                 return json::witt_to_json(witt_add(witt_arg(c, "a"), witt_arg(c, "b")));
               }});
  l.push_back({"witt", "div", "Witt difference (series ratio)", {a, b}, {}, true, [](const Context& c) {
                 const Json ja = c.json("a"), jb = c.json("b");
                 if (json::is_rational_witt(ja) && json::is_rational_witt(jb))
                   return json::rational_witt_to_json(
                       rational_div(json::rat_rational_witt_from_json(ja), json::rat_rational_witt_from_json(jb)));
                 return json::witt_to_json(witt_sub(witt_arg(c, "a"), witt_arg(c, "b")));
               }});
  l.push_back({"witt", "mul", "Witt product", {a, b}, {}, true,
               [](const Context& c) { return json::witt_to_json(witt_mul(witt_arg(c, "a"), witt_arg(c, "b"))); }});
  l.push_back({"witt", "quotient", "S with S * b = a, by ghost division", {a, b}, {}, true,
               [](const Context& c) { return json::witt_to_json(witt_divide(witt_arg(c, "a"), witt_arg(c, "b"))); }});
  l.push_back({"witt", "frobenius", "F_n", {n, w}, {}, true,
               [](const Context& c) { return json::witt_to_json(frobenius(c.positive("n"), witt_arg(c, "w"))); }});
  l.push_back({"witt", "verschiebung", "V_n", {n, w}, {}, true,
               [](const Context& c) { return json::witt_to_json(verschiebung(c.positive("n"), witt_arg(c, "w"))); }});
  l.push_back({"witt", "ghost", "ghost components", {w}, {}, true, [](const Context& c) {
                 Json out = Json::object();
                 out["ghost"] = json::ghost_to_json(ghost(witt_arg(c, "w")));
                 return out;
               }});
  l.push_back({"witt", "unghost", "Witt vector from ghost components", {{"ghost", "JSON array"}}, {}, false,
               [](const Context& c) { return json::witt_to_json(unghost(json::ghost_from_json(c.json("ghost")))); }});
  l.push_back({"witt", "teichmuller", "[a] = 1/(1 - at)", {{"a", "rational"}}, {}, true, [](const Context& c) {
                 return json::witt_to_json(teichmuller(json::read_rational(Json(c.raw("a"))), c.trunc));
               }});

  // class
  l.push_back({"class", "convert", "switch between the T and L bases", {cls}, {}, false, [](const Context& c) {
                 const Json j = c.json("class");
                 if (json::is_lclass(j)) return json::torified_to_json(l_to_t(json::lclass_from_json(j)));
                 return json::lclass_to_json(t_to_l(json::torified_from_json(j)));
               }});
  l.push_back({"class", "points", "number of F_{1^m}-points", {cls, {"m", "positive integer"}}, {}, false,
               [](const Context& c) {
                 Json out = Json::object();
                 out["count"] = json::string_of(Rational(f1m_points(json::torified_from_json(c.json("class")), c.integer("m"))));
                 return out;
               }});
  l.push_back({"class", "euler", "Euler characteristic", {cls}, {}, false, [](const Context& c) {
                 Json out = Json::object();
                 out["euler"] = json::string_of(Rational(euler_characteristic(json::torified_from_json(c.json("class")))));
                 return out;
               }});
  l.push_back({"class", "bb", "assemble from fixed components and fiber dimensions",
               {{"pieces", "JSON array of {\"class\":…,\"dim\":d}"}}, {}, false, [](const Context& c) {
                 return json::torified_to_json(bb_assemble(json::bb_pieces_from_json(c.json("pieces"))));
               }});
  l.push_back({"class", "virtual", "L^{-dim/2} [X]", {cls, {"dim", "integer"}}, {}, false, [](const Context& c) {
                 return json::lclass_to_json(virtual_motive(json::lclass_from_json(c.json("class")), c.integer("dim")));
               }});
  l.push_back({"class", "add", "sum of classes", {a, b}, {}, false, [](const Context& c) {
                 return json::torified_to_json(json::torified_from_json(c.json("a")) + json::torified_from_json(c.json("b")));
               }});
  l.push_back({"class", "mul", "product of classes", {a, b}, {}, false, [](const Context& c) {
                 return json::torified_to_json(json::torified_from_json(c.json("a")) * json::torified_from_json(c.json("b")));
               }});
  l.push_back({"class", "bc-sigma", "sigma_n on a leveled class", {n, {"leveled", "JSON {\"class\":…,\"level\":N}"}}, {}, false,
               [](const Context& c) {
                 return json::leveled_to_json(bc_sigma(c.integer("n"), json::leveled_from_json(c.json("leveled"))));
               }});
  l.push_back({"class", "bc-rho", "rho_n on a leveled class", {n, {"leveled", "JSON {\"class\":…,\"level\":N}"}}, {}, false,
               [](const Context& c) {
                 return json::leveled_to_json(bc_rho(c.integer("n"), json::leveled_from_json(c.json("leveled"))));
               }});

  // zeta
  l.push_back({"zeta", "f1", "F_1 zeta function", {cls}, {}, true, [](const Context& c) {
                 const TorifiedClass x = json::torified_from_json(c.json("class"));
                 const F1Zeta z = f1_zeta(x, c.trunc);
                 Json out = zeta_output(json::ghost_to_json(z.ghosts), z.series);
                 Json rational = Json::object();
                 rational["log_derivative"] = f1_log_derivative(x);
                 out["rational"] = std::move(rational);
                 return out;
               }});
  l.push_back({"zeta", "hw", "Hasse-Weil zeta function", {cls, {"q", "integer >= 2, or sym"}}, {}, true, [](const Context& c) {
                 const TorifiedClass x = json::torified_from_json(c.json("class"));
                 if (c.raw("q") == "sym") {
                   Json out = Json::object();
                   out["q"] = "sym";
                   out["ghost"] = json::symbolic_ghost_to_json(hw_ghosts_symbolic(x, c.trunc));
                   return out;
                 }
                 const Integer q = c.integer("q");
                 const IntRationalWitt r = hw_zeta(x, q);
                 Json out = zeta_output(json::ghost_to_json(hw_ghosts(x, q, c.trunc)), r.expand(c.trunc));
                 out["rational"] = json::rational_witt_to_json(r);
                 return out;
               }});
  l.push_back({"zeta", "lefschetz", "Lefschetz zeta function of a toral map", {matrix},
               {{"closed", "closed product form"}, {"series", "truncated series (default)"}}, true, [](const Context& c) {
                 const ToralMap f(json::int_matrix_from_json(c.json("matrix")));
                 if (c.flag("closed") && c.flag("series")) throw UsageError("--closed and --series are exclusive");
                 if (c.flag("closed")) return json::lefschetz_to_json(lefschetz_zeta_closed(f));
                 return zeta_output(json::ghost_to_json(GhostVector<Integer>{lefschetz_numbers(f, c.trunc)}),
                                    lefschetz_zeta_series(f, c.trunc));
               }});
  l.push_back({"zeta", "artin-mazur", "Artin-Mazur zeta function of a toral map", {matrix}, {}, true, [](const Context& c) {
                 const ToralMap f(json::int_matrix_from_json(c.json("matrix")));
                 const auto g = dynamical_ghosts(f, c.trunc, ZetaKind::ArtinMazur);
                 return zeta_output(json::ghost_to_json(g), unghost(g));
               }});
  l.push_back({"zeta", "torified", "dynamical zeta of a torified variety",
               {{"matrices", "JSON array of matrices, one per torus"}, {"kind", "lefschetz (default) or artin-mazur"}}, {}, true,
               [](const Context& c) {
                 const Json ms = c.json("matrices");
                 if (!ms.is_array()) throw UsageError("--matrices must be a JSON array");
                 std::vector<ToralMap> parts;
                 for (const auto& m : ms) parts.emplace_back(json::int_matrix_from_json(m));
                 const std::string kind = c.has("kind") ? c.raw("kind") : "lefschetz";
                 if (kind != "lefschetz" && kind != "artin-mazur") throw UsageError("--kind must be lefschetz or artin-mazur");
                 const ZetaKind k = kind == "lefschetz" ? ZetaKind::Lefschetz : ZetaKind::ArtinMazur;
                 GhostVector<Integer> g;
                 g.values.assign(c.trunc, Integer(0));
                 for (const auto& p : parts) g = g + dynamical_ghosts(p, c.trunc, k);
                 return zeta_output(json::ghost_to_json(g), torified_dynamical_zeta(parts, c.trunc, k));
               }});
  l.push_back({"zeta", "quotient-check", "Z_{F_q}(T^k) /_W Z_{0,k,q} checked against Z_{1,k,q}",
               {{"k", "nonnegative integer"}, {"q", "integer >= 2"}}, {}, true, [](const Context& c) {
                 const auto k = c.integer("k");
                 if (k < 0) throw UsageError("--k must be >= 0");
                 Json out = Json::object();
                 out["ghost"] = json::ghost_to_json(hw_quotient_check(static_cast<std::size_t>(k), c.integer("q"), c.trunc));
                 return out;
               }});
  l.push_back({"zeta", "q-limit", "q -> 1 limit of the Witt-quotient sum", {cls}, {}, true, [](const Context& c) {
                 Json out = Json::object();
                 out["ghost"] = json::ghost_to_json(q_to_1_limit(hw_quotient_sum_symbolic(json::torified_from_json(c.json("class")), c.trunc)));
                 return out;
               }});
  l.push_back({"zeta", "polylog", "Li_{1-k}(t) as a rational function", {{"k", "positive integer"}}, {}, false,
               [](const Context& c) {
                 const auto r = polylog_rational(c.integer("k"));
                 return rational_function_to_json(r.num, r.den);
               }});

  // endo
  l.push_back({"endo", "lmap", "det(1 - tM)^{-1}", {matrix}, {}, false, [](const Context& c) {
                 return json::rational_witt_to_json(l_map(EndoObject(json::rat_matrix_from_json(c.json("matrix")))));
               }});
  l.push_back({"endo", "frobenius", "(E, f^n)", {n, matrix}, {}, false, [](const Context& c) {
                 return json::rat_matrix_to_json(endo_frobenius(c.positive("n"), EndoObject(json::rat_matrix_from_json(c.json("matrix")))).matrix());
               }});
  l.push_back({"endo", "verschiebung", "block companion form", {n, matrix}, {}, false, [](const Context& c) {
                 return json::rat_matrix_to_json(
                     endo_verschiebung(c.positive("n"), EndoObject(json::rat_matrix_from_json(c.json("matrix")))).matrix());
               }});
  l.push_back({"endo", "sum", "direct sum", {a, b}, {}, false, [](const Context& c) {
                 return json::rat_matrix_to_json(direct_sum(EndoObject(json::rat_matrix_from_json(c.json("a"))),
                                                            EndoObject(json::rat_matrix_from_json(c.json("b"))))
                                                     .matrix());
               }});
  l.push_back({"endo", "tensor", "tensor product", {a, b}, {}, false, [](const Context& c) {
                 return json::rat_matrix_to_json(
                     tensor(EndoObject(json::rat_matrix_from_json(c.json("a"))), EndoObject(json::rat_matrix_from_json(c.json("b"))))
                         .matrix());
               }});
  l.push_back({"endo", "ghost", "traces of M^m", {matrix}, {}, true, [](const Context& c) {
                 Json out = Json::object();
                 out["ghost"] = json::ghost_to_json(trace_ghosts(EndoObject(json::rat_matrix_from_json(c.json("matrix"))), c.trunc));
                 return out;
               }});
  l.push_back({"endo", "delta", "[E+] - [E-] as a rational Witt vector", {{"graded", "JSON {\"plus\":…,\"minus\":…}"}}, {}, false,
               [](const Context& c) { return json::rational_witt_to_json(delta(json::graded_from_json(c.json("graded")))); }});
  l.push_back({"endo", "phimu", "graded diagonal object with the given rational Witt class",
               {{"rational", "JSON {\"num\":…,\"den\":…}"}}, {}, false, [](const Context& c) {
                 return json::graded_to_json(phi_mu(json::rat_rational_witt_from_json(c.json("rational"))));
               }});

  // equivariant
  l.push_back({"equivariant", "sigma", "precompose with g -> g^n", {n, action}, {}, false, [](const Context& c) {
                 const Json j = c.json("action");
                 if (json::is_relative(j)) return json::relative_to_json(bc_sigma(c.integer("n"), json::relative_from_json(j)));
                 return json::action_to_json(sigma_action(c.integer("n"), json::action_from_json(j)));
               }});
  l.push_back({"equivariant", "rho", "geometric Verschiebung", {n, action}, {}, false, [](const Context& c) {
                 const Json j = c.json("action");
                 if (json::is_relative(j)) return json::relative_to_json(bc_rho(c.integer("n"), json::relative_from_json(j)));
                 return json::action_to_json(verschiebung_action(c.integer("n"), json::action_from_json(j)));
               }});
  l.push_back({"equivariant", "periodic", "fixed points of g^k", {action, {"k", "positive integer"}}, {}, false,
               [](const Context& c) {
                 Json out = Json::object();
                 out["points"] = periodic_points(json::action_from_json(c.json("action")), c.integer("k"));
                 return out;
               }});
  l.push_back({"equivariant", "euler", "Z[Q/Z]-valued Euler characteristic", {action}, {}, false,
               [](const Context& c) { return json::qz_to_json(euler_char(json::action_from_json(c.json("action")))); }});
  l.push_back({"equivariant", "orbits", "orbit-type multiset", {action}, {}, false, [](const Context& c) {
                 const Json j = c.json("action");
                 Json out = Json::object();
                 if (json::is_relative(j)) {
                   Json types = Json::array();
                   for (const auto& [t, b] : orbit_type(json::relative_from_json(j))) types.push_back(Json::array({t, b}));
                   out["orbit_type"] = std::move(types);
                 } else {
                   out["orbit_type"] = orbit_type(json::action_from_json(j));
                 }
                 return out;
               }});
  l.push_back({"equivariant", "check", "periodic-point and Euler characteristic identities",
               {action, {"n-max", "largest n (default 4)"}, {"k-max", "largest k (default 32)"}}, {}, false, equivariant_check});

  // euler
  l.push_back({"euler", "spectral", "spectral Euler characteristic", {matrix}, {}, false, [](const Context& c) {
                 return json::qz_to_json(spectral_euler(json::int_matrix_from_json(c.json("matrix"))));
               }});
  return l;
}

std::size_t default_trunc() {
  const char* env = std::getenv("BCWITT_TRUNC");
  if (env == nullptr || *env == '\0') return kDefaultTrunc;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("BCWITT_TRUNC must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

// Values from an --input file fill options that were not given on the command line.
void merge_input(const std::string& path, const Leaf& leaf, Context& ctx) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read --input file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("--input " + path + ": invalid JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw UsageError("--input file must hold a JSON object of option values");
  auto known = [&](const std::string& key) {
    for (const auto& o : leaf.options)
      if (o.first == key) return true;
    return leaf.uses_trunc && key == "trunc";
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool is_flag = false;
    for (const auto& f : leaf.flags) is_flag = is_flag || f.first == key;
    if (is_flag) {
      if (!it.value().is_boolean()) throw UsageError("--input: flag \"" + key + "\" must be true or false");
      if (it.value().get<bool>()) ctx.flags.insert(key);
      continue;
    }
    if (!known(key)) throw UsageError("--input: unknown option \"" + key + "\"");
    if (ctx.has(key)) continue;
    ctx.values[key] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::vector<Leaf> table = leaves();

  CLI::App app{"Exact Bost-Connes, Witt vector and zeta function computations", "bcwitt"};
  app.require_subcommand(1, 1);
  std::map<std::string, CLI::App*> groups;
  // Per-leaf option storage; deque keeps references stable.
  std::deque<std::map<std::string, std::string>> storage;
  std::deque<std::map<std::string, bool>> flag_storage;
  std::deque<std::string> input_paths;
  std::vector<CLI::App*> subs;

  for (const auto& leaf : table) {
    auto& group = groups[leaf.group];
    if (group == nullptr) {
      group = app.add_subcommand(leaf.group, leaf.group + " commands");
      group->require_subcommand(1, 1);
    }
    CLI::App* sub = group->add_subcommand(leaf.name, leaf.help);
    auto& values = storage.emplace_back();
    auto& flags = flag_storage.emplace_back();
    for (const auto& [name, help] : leaf.options) sub->add_option("--" + name, values[name], help);
    for (const auto& [name, help] : leaf.flags) sub->add_flag("--" + name, flags[name], help);
    if (leaf.uses_trunc) sub->add_option("--trunc", values["trunc"], "truncation (default 12, or BCWITT_TRUNC)");
    sub->add_option("--input", input_paths.emplace_back(), "JSON file with option values");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::size_t index = 0;
  while (index < subs.size() && !subs[index]->parsed()) ++index;
  if (index == subs.size()) {
    err << "no command given\n";
    return 2;
  }
  const Leaf& leaf = table[index];
  CLI::App* sub = subs[index];

  try {
    Context ctx;
    for (const auto& [name, value] : storage[index])
      if (sub->count("--" + name) > 0) ctx.values[name] = value;
    for (const auto& [name, set] : flag_storage[index])
      if (set) ctx.flags.insert(name);
    if (sub->count("--input") > 0) merge_input(input_paths[index], leaf, ctx);
    ctx.trunc = ctx.has("trunc") ? ctx.positive("trunc") : default_trunc();
    const Json result = leaf.handler(ctx);
    out << result.dump() << '\n';
    return 0;
  } catch (const DomainError& e) {
    Json body = Json::object();
    body["kind"] = std::string(error_kind_name(e.kind()));
    body["detail"] = e.detail();
    Json wrapped = Json::object();
    wrapped["error"] = std::move(body);
    out << wrapped.dump() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace bcw
