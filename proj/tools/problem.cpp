#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kaz/character.hpp"
#include "kaz/cli.hpp"
#include "kaz/error.hpp"
#include "kaz/gc_newton.hpp"
#include "kaz/kazarnovskii.hpp"
#include "kaz/mixed.hpp"
#include "kaz/semigroup.hpp"

namespace kaz::cli {

namespace {

// ---- reading ----

const Json& field(const Json& doc, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key)) throw UserError("missing field \"" + key + "\"");
  return doc.at(key);
}

Rational read_rational(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw UserError(what + ": expected an integer or a \"p/q\" string");
}

std::int64_t read_int(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    Rational r = parse_rational(v.get<std::string>());
    if (is_integer(r)) return to_int64(r.get_num());
  }
  throw UserError(what + ": expected an integer");
}

const Json& read_array(const Json& v, const std::string& what) {
  if (!v.is_array()) throw UserError(what + ": expected an array");
  return v;
}

RationalVector read_vector(const Json& v, const std::string& what) {
  std::vector<Rational> c;
  for (const auto& x : read_array(v, what)) c.push_back(read_rational(x, what));
  return RationalVector(std::move(c));
}

LatticePoint read_point(const Json& v, const std::string& what) {
  std::vector<std::int64_t> c;
  for (const auto& x : read_array(v, what)) c.push_back(read_int(x, what));
  return LatticePoint(std::move(c));
}

std::vector<LatticePoint> read_points(const Json& v, const std::string& what) {
  std::vector<LatticePoint> out;
  for (const auto& p : read_array(v, what)) out.push_back(read_point(p, what));
  if (out.empty()) throw UserError(what + ": must be nonempty");
  return out;
}

std::vector<RationalVector> read_rational_points(const Json& v, const std::string& what) {
  std::vector<RationalVector> out;
  for (const auto& p : read_array(v, what)) out.push_back(read_vector(p, what));
  if (out.empty()) throw UserError(what + ": must be nonempty");
  return out;
}

RootData read_group(const Json& doc) {
  std::vector<Factor> factors;
  for (const auto& f : read_array(field(doc, "group"), "group")) {
    std::string type = field(f, "type").is_string() ? field(f, "type").get<std::string>() : "";
    std::int64_t n = read_int(field(f, "n"), "group.n");
    if (n < 1) throw UserError("group.n must be positive");
    FactorType t;
    if (type == "SL") t = FactorType::sl;
    else if (type == "GL") t = FactorType::gl;
    else if (type == "torus" || type == "T") t = FactorType::torus;
    else throw UserError("group.type must be \"SL\", \"GL\" or \"torus\"");
    factors.push_back({t, static_cast<std::size_t>(n)});
  }
  return RootSystemData::make(std::move(factors));
}

std::vector<WeightSet> read_weight_sets(const RootData& rd, const Json& doc) {
  std::vector<WeightSet> out;
  for (const auto& s : read_array(field(doc, "weight_sets"), "weight_sets"))
    out.push_back(make_weight_set(rd, read_points(s, "weight_sets")));
  return out;
}

std::vector<RationalPolytope> read_bodies(const Json& doc) {
  std::vector<RationalPolytope> out;
  for (const auto& b : read_array(field(doc, "bodies"), "bodies")) out.push_back(convex_hull(read_rational_points(b, "bodies")));
  return out;
}

MultivariatePolynomial read_polynomial(const Json& doc) {
  const Json& p = field(doc, "polynomial");
  std::int64_t n = read_int(field(p, "num_vars"), "polynomial.num_vars");
  if (n < 1) throw UserError("polynomial.num_vars must be positive");
  MultivariatePolynomial f(static_cast<std::size_t>(n));
  for (const auto& t : read_array(field(p, "terms"), "polynomial.terms")) {
    Exponent e;
    for (const auto& x : read_array(field(t, "exponent"), "exponent")) {
      std::int64_t v = read_int(x, "exponent");
      if (v < 0) throw UserError("exponents must be nonnegative");
      e.push_back(static_cast<int>(v));
    }
    f.add_term(e, read_rational(field(t, "coefficient"), "coefficient"));
  }
  return f;
}

// ---- writing ----

Json write(const Rational& q) { return to_string(q); }
Json write(const Integer& z) { return to_string(z); }

Json write(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(write(x));
  return a;
}

Json write(const LatticePoint& p) {
  Json a = Json::array();
  for (auto x : p) a.push_back(x);
  return a;
}

Json write_points(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(write(p));
  return a;
}

Json write(const RationalPolytope& p) {
  Json doc;
  doc["ambient_dim"] = p.ambient_dim();
  doc["dim"] = p.intrinsic_dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(write(v));
  doc["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : p.proper_facets()) facets.push_back({{"normal", write(f.normal)}, {"offset", write(f.offset)}});
  doc["facets"] = facets;
  Json eqs = Json::array();
  for (const auto& e : p.equations()) eqs.push_back({{"normal", write(e.normal)}, {"value", write(e.value)}});
  doc["equations"] = eqs;
  if (!p.is_empty()) doc["volume"] = write(volume(p));
  return doc;
}

Json write(const WeightMultiset& w) {
  Json a = Json::array();
  for (const auto& [p, m] : w) a.push_back({{"weight", write(p)}, {"multiplicity", std::to_string(m)}});
  return a;
}

// ---- commands ----

using Handler = std::function<Json(const Json&, const RunOptions&)>;

Json cmd_hull(const Json& in, const RunOptions&) { return write(convex_hull(read_rational_points(field(in, "points"), "points"))); }

Json cmd_mixed_volume(const Json& in, const RunOptions&) {
  return {{"value", write(mixed_volume(read_bodies(in)))}};
}

Json cmd_mixed_integral(const Json& in, const RunOptions&) {
  return {{"value", write(mixed_integral(read_polynomial(in), read_bodies(in)))}};
}

WeightSet read_single_set(const Json& in, RootData rd) { return make_weight_set(rd, read_points(field(in, "weights"), "weights")); }

Json cmd_weight_polytope(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  return write(weight_polytope(read_single_set(in, rd)));
}

Json cmd_moment_polytope(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  return write(moment_polytope(read_single_set(in, rd)));
}

Json cmd_kazarnovskii(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  auto r = kazarnovskii_index(*rd, read_weight_sets(rd, in));
  return {{"value", write(r.value)},
          {"formula_used", to_string(r.formula_used)},
          {"intermediate", write(r.intermediate)},
          {"moment_intermediate", write(r.moment_intermediate)},
          {"group_dim", rd->group_dim()},
          {"weyl_order", rd->weyl_order()}};
}

Json cmd_bk(const Json& in, const RunOptions&) {
  std::vector<FiniteSet> sets;
  for (const auto& s : read_array(field(in, "sets"), "sets")) sets.push_back(make_finite_set(read_points(s, "sets")));
  return {{"value", write(bk_count(sets))}};
}

Json cmd_hilbert(const Json& in, const RunOptions& opt) {
  RootData rd = read_group(in);
  WeightSet a = read_single_set(in, rd);
  std::vector<std::int64_t> ks{10, 50, 200};
  if (in.contains("k_schedule")) {
    ks.clear();
    for (const auto& k : read_array(in.at("k_schedule"), "k_schedule")) ks.push_back(read_int(k, "k_schedule"));
  } else if (in.contains("k")) {
    ks = {read_int(in.at("k"), "k")};
  }
  if (opt.k_max) {
    std::erase_if(ks, [&](std::int64_t k) { return k > *opt.k_max; });
    if (ks.empty() || ks.back() != *opt.k_max) ks.push_back(*opt.k_max);
  }
  auto h = hilbert_asymptotic_check(*rd, a, ks);
  Json samples = Json::array();
  for (const auto& s : h.samples) samples.push_back({{"k", s.k}, {"H", write(s.value)}, {"normalized", write(s.normalized)}});
  return {{"samples", samples}, {"target", write(h.target)}, {"final_relative_deviation", write(h.final_deviation)}};
}

Json cmd_completion(const Json& in, const RunOptions&) {
  if (in.contains("group")) {
    RootData rd = read_group(in);
    return {{"points", write_points(completion_group(read_single_set(in, rd)).points)}};
  }
  return {{"points", write_points(completion_torus(make_finite_set(read_points(field(in, "points"), "points"))).points)}};
}

Json cmd_gc(const Json& in, const RunOptions&) {
  LatticePoint lambda = read_point(field(in, "lambda"), "lambda");
  std::int64_t n = in.contains("n") ? read_int(in.at("n"), "n") : static_cast<std::int64_t>(lambda.dim());
  if (n < 1 || static_cast<std::size_t>(n) != lambda.dim()) throw UserError("lambda must have n coordinates");
  Integer count = gc_lattice_count(static_cast<std::size_t>(n), lambda);
  RootData rd = RootSystemData::make({{FactorType::gl, static_cast<std::size_t>(n)}});
  Rational fw = weyl_dim_polynomial(*rd).evaluate(lambda.to_rational());
  if (Rational(count) != fw)
    throw InvariantViolation("GC lattice count " + to_string(count) + " differs from Weyl dimension " + to_string(fw));
  Json out{{"lattice_points", write(count)}, {"dim_check", "ok"}};
  if (n >= 2) out["polytope"] = write(gc_polytope(static_cast<std::size_t>(n), lambda.to_rational()).polytope);
  return out;
}

Json cmd_newton_gl(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  NewtonMatrixPolytope p = newton_polytope_gl(read_single_set(in, rd));
  Json out = write(p.polytope());
  out["n"] = p.n();
  out["inequality_count"] = p.inequalities().size();
  if (in.contains("diagonal")) {
    RationalVector d = read_vector(in.at("diagonal"), "diagonal");
    RationalPolytope fiber = newton_fiber(p, d);
    out["fiber"] = write(fiber);
    if (!fiber.is_empty()) {
      if (!check_fiber_product(p, d)) throw InvariantViolation("Newton fiber is not a product of GC polytopes");
      out["fiber_check"] = "ok";
    }
  }
  return out;
}

Json cmd_tensor(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  LatticePoint l = read_point(field(in, "lambda"), "lambda"), m = read_point(field(in, "mu"), "mu");
  auto s = tensor_spectrum(*rd, l, m);
  return {{"spectrum", write(s.dominant_weights)}, {"dimension_check", "ok"}};
}

Json cmd_prv_check(const Json& in, const RunOptions&) {
  RootData rd = read_group(in);
  LatticePoint l = read_point(field(in, "lambda"), "lambda"), m = read_point(field(in, "mu"), "mu");
  PrvResult prv = check_prv(*rd, l, m);
  if (!prv.holds) throw InvariantViolation("PRV inclusion fails at " + [&] {
    std::ostringstream os;
    os << *prv.witness;
    return os.str();
  }());
  bool additive = check_weight_polytope_additivity(*rd, l, m);
  if (!additive) throw InvariantViolation("weight polytope additivity fails");
  bool axioms = verify_K0_axioms(*rd, l, m);
  if (!axioms) throw InvariantViolation("semigroup axioms fail");
  return {{"holds", true}, {"witness", nullptr}, {"additivity", true}, {"k0_axioms", true}};
}

struct Suite {
  std::string name;
  std::int64_t trials = 0;
  std::int64_t passed = 0;
  void record(bool ok) {
    ++trials;
    if (ok) ++passed;
  }
  Json json() const { return {{"name", name}, {"trials", trials}, {"passed", passed}}; }
};

Json cmd_verify(const Json& in, const RunOptions& opt) {
  Rng rng(opt.seed);
  const std::int64_t trials = in.contains("trials") ? read_int(in.at("trials"), "trials") : 20;
  if (trials < 1 || trials > 10000) throw UserError("trials must be between 1 and 10000");

  std::vector<FiniteSet> sets;
  if (in.contains("sets")) {
    for (const auto& s : read_array(in.at("sets"), "sets")) sets.push_back(make_finite_set(read_points(s, "sets")));
  } else {
    for (std::int64_t t = 0; t < trials; ++t) {
      std::size_t count = static_cast<std::size_t>(rng.uniform(1, 6));
      std::vector<LatticePoint> pts;
      for (std::size_t i = 0; i < count; ++i) pts.push_back(LatticePoint{rng.uniform(0, 4), rng.uniform(0, 4)});
      sets.push_back(make_finite_set(pts));
    }
  }

  Suite prop9{"completion_identity"}, homomorphism{"hull_homomorphism"}, closure{"completion_closure"}, congruence{"analogy_congruence"};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const FiniteSet& a = sets[i];
    const FiniteSet& b = sets[(i + 1) % sets.size()];
    prop9.record(verify_prop9(a, a.dim));
    if (b.dim == a.dim) {
      homomorphism.record(hull(set_sum(a, b)) == minkowski_sum(hull(a), hull(b)));
      congruence.record(analogous(set_sum(a, b), set_sum(completion_torus(a), b)));
    }
    FiniteSet c = completion_torus(a);
    closure.record(std::includes(c.points.begin(), c.points.end(), a.points.begin(), a.points.end()) &&
                   completion_torus(c) == c);
  }
  std::vector<Suite> suites{prop9, homomorphism, closure, congruence};

  if (in.contains("group")) {
    RootData rd = read_group(in);
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
    if (in.contains("pairs")) {
      for (const auto& p : read_array(in.at("pairs"), "pairs"))
        pairs.emplace_back(read_point(field(p, "lambda"), "lambda"), read_point(field(p, "mu"), "mu"));
    } else {
      for (std::int64_t t = 0; t < trials; ++t) {
        LatticePoint l(rd->rank()), m(rd->rank());
        for (std::size_t i = 0; i < l.dim(); ++i) {
          l[i] = rng.uniform(-3, 3);
          m[i] = rng.uniform(-3, 3);
        }
        pairs.emplace_back(dominant_representative(*rd, l), dominant_representative(*rd, m));
      }
    }
    Suite prv{"prv"}, additivity{"weight_polytope_additivity"}, axioms{"k0_axioms"}, dims{"tensor_dimension"};
    MultivariatePolynomial fw = weyl_dim_polynomial(*rd);
    for (const auto& [l, m] : pairs) {
      prv.record(check_prv(*rd, l, m).holds);
      additivity.record(check_weight_polytope_additivity(*rd, l, m));
      axioms.record(verify_K0_axioms(*rd, l, m));
      Rational total(0);
      for (const auto& [nu, k] : tensor_spectrum(*rd, l, m).dominant_weights)
        total += Rational(static_cast<long>(k)) * fw.evaluate(nu.to_rational());
      dims.record(total == fw.evaluate(l.to_rational()) * fw.evaluate(m.to_rational()));
    }
    suites.insert(suites.end(), {prv, additivity, axioms, dims});
  }

  Json list = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    list.push_back(s.json());
    all = all && s.passed == s.trials;
  }
  if (!all) {
    std::string failed;
    for (const auto& s : suites)
      if (s.passed != s.trials) failed += (failed.empty() ? "" : ", ") + s.name;
    throw InvariantViolation("property suites failed: " + failed);
  }
  return {{"seed", std::to_string(opt.seed)}, {"suites", list}, {"all_passed", true}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"hull", cmd_hull},
      {"mixed-volume", cmd_mixed_volume},
      {"mixed-integral", cmd_mixed_integral},
      {"weight-polytope", cmd_weight_polytope},
      {"moment-polytope", cmd_moment_polytope},
      {"kazarnovskii", cmd_kazarnovskii},
      {"bk", cmd_bk},
      {"hilbert", cmd_hilbert},
      {"completion", cmd_completion},
      {"gc", cmd_gc},
      {"newton-gl", cmd_newton_gl},
      {"tensor", cmd_tensor},
      {"prv-check", cmd_prv_check},
      {"verify", cmd_verify},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, h] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

Json run(const std::string& command, const Json& input, const RunOptions& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UserError("unknown command \"" + command + "\"");
  if (!input.is_object()) throw UserError("input must be a JSON object");
  try {
    return it->second(input, options);
  } catch (const Json::exception& e) {
    throw UserError(std::string("malformed input: ") + e.what());
  }
}

Json error_document(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace kaz::cli
