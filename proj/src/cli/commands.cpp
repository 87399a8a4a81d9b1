#include "annulab/cli/commands.hpp"

#include "annulab/errors.hpp"
#include "annulab/lengthlab.hpp"
#include "annulab/points.hpp"
#include "annulab/torsors.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace annulab::cli {

namespace {

struct Context {
  Problem pr;
  const Options& opt;
  bool unknown = false;
};

using Handler = std::function<json(Context&)>;

const Annulus& need_annulus(const Context& c) {
  if (!c.pr.annulus) throw std::invalid_argument("annulus: missing required section");
  return *c.pr.annulus;
}

const SemiGraph& need_graph(const Context& c) {
  if (!c.pr.semigraph) throw std::invalid_argument("semigraph: missing required section");
  return *c.pr.semigraph;
}

const NewtonData& need_newton(const Context& c) {
  if (!c.pr.newton) throw std::invalid_argument("newton: missing required section");
  return *c.pr.newton;
}

const json& param(const Context& c, const std::string& key) {
  if (!c.pr.params.contains(key)) throw std::invalid_argument("params." + key + ": missing required field");
  return c.pr.params.at(key);
}

Rational param_rational(const Context& c, const std::string& key) {
  return rational_field(param(c, key), "params." + key);
}

std::optional<Rational> param_extended(const Context& c, const std::string& key) {
  return extended_field(param(c, key), "params." + key);
}

std::int64_t param_int(const Context& c, const std::string& key, std::optional<std::int64_t> fallback = {}) {
  if (!c.pr.params.contains(key)) {
    if (fallback) return *fallback;
    throw std::invalid_argument("params." + key + ": missing required field");
  }
  const json& j = c.pr.params.at(key);
  if (!j.is_number_integer()) throw std::invalid_argument("params." + key + ": expected an integer");
  return j.get<std::int64_t>();
}

std::string param_string(const Context& c, const std::string& key) {
  const json& j = param(c, key);
  if (!j.is_string()) throw std::invalid_argument("params." + key + ": expected a string");
  return j.get<std::string>();
}

int max_iter(const Context& c) {
  if (c.opt.max_iter) return *c.opt.max_iter;
  return static_cast<int>(param_int(c, "max_iter", kDefaultMaxIter));
}

std::int64_t n_max(const Context& c) {
  if (c.opt.n_max) return *c.opt.n_max;
  return param_int(c, "n_max", 32);
}

TorsorClass torsor(const Context& c) {
  std::int64_t n = param_int(c, "n", c.pr.p);
  const Annulus& A = need_annulus(c);
  if (c.pr.laurent) return TorsorClass(n, *c.pr.laurent, A);
  return TorsorClass(n, need_newton(c), A);
}

json verdict_json(const Verdict& v) {
  json j{{"verdict", to_string(v.kind)}, {"basis", v.basis}, {"iterations", v.iterations}};
  j["reason"] = v.reason == UnknownReason::None ? json(nullptr) : json(to_string(v.reason));
  j["certificate"] = v.certificate ? json(to_string(*v.certificate)) : json(nullptr);
  j["log_u"] = v.last_mag ? to_json(*v.last_mag) : json(nullptr);
  return j;
}

json radius_json(const RadiusBound& rb) {
  json j{{"lower", to_json(rb.lower)}, {"upper", to_json(rb.upper)}, {"basis", rb.basis}};
  j["exact"] = rb.exact ? to_json(*rb.exact) : json(nullptr);
  j["proof_bound"] = rb.proof_bound ? to_json(*rb.proof_bound) : json(nullptr);
  return j;
}

json length_json(const Length& l) { return l ? to_json(*l) : json("inf"); }

json cmd_eval(Context& c) {
  const NewtonData& nd = need_newton(c);
  json rows = json::array();
  std::vector<Rational> lambdas;
  if (c.pr.params.contains("lambdas")) {
    for (const auto& x : c.pr.params.at("lambdas")) lambdas.push_back(rational_field(x, "params.lambdas"));
  } else {
    lambdas.push_back(param_rational(c, "lambda"));
  }
  for (const auto& l : lambdas) rows.push_back({{"lambda", to_json(l)}, {"value", to_json(eval_at(nd, l))}});
  return {{"values", rows}};
}

json cmd_dominant(Context& c) {
  const NewtonData& nd = need_newton(c);
  const LogInterval& I = need_annulus(c).interval;
  auto d = dominant_degree(nd, I);
  json j{{"invertible", d.has_value()}, {"coordinate", is_coordinate(nd, I)}};
  j["degree"] = d ? json(*d) : json(nullptr);
  j["normalized"] = nullptr;
  j["image"] = nullptr;
  if (d) {
    Normalized nz = normalize(nd, I);
    j["normalized"] = {{"degree", nz.degree}, {"coeff", to_json(nz.coeff)}, {"remainder", to_json(nz.remainder)}};
    if (*d != 0) {
      ImageInterval im = image_interval(nd, I);
      j["image"] = {{"interval", to_json(im.interval)}, {"degree", im.degree}};
    }
  }
  return j;
}

json cmd_fibers(Context& c) {
  std::int64_t h = param_int(c, "h");
  Rational m = param_rational(c, "m");
  Rational r = param_rational(c, "r");
  return {{"count", fiber_count(c.pr.p, static_cast<int>(h), m, r).get_str()},
          {"recursive", fiber_count_recursive(c.pr.p, static_cast<int>(h), m, r).get_str()}};
}

std::vector<FiberRow> tree_rows(Context& c) {
  std::int64_t h = param_int(c, "h");
  Rational m = param_rational(c, "m");
  std::vector<Rational> radii;
  for (const auto& x : param(c, "radii")) radii.push_back(rational_field(x, "params.radii"));
  return fiber_tree(c.pr.p, static_cast<int>(h), m, radii);
}

json cmd_fiber_tree(Context& c) {
  json rows = json::array();
  for (const auto& row : tree_rows(c)) {
    json levels = json::array();
    for (const auto& lv : row.levels)
      levels.push_back({{"level", lv.level},
                        {"center_mag", to_json(lv.center_mag)},
                        {"radius", to_json(lv.radius)},
                        {"separation", to_json(lv.separation)},
                        {"distinct", lv.distinct}});
    rows.push_back({{"radius", to_json(row.radius)}, {"count", row.count.get_str()}, {"levels", levels}});
  }
  return {{"rows", rows}};
}

json cmd_push(Context& c) {
  TrunkPoint pt{param_rational(c, "center_mag"), param_rational(c, "radius"),
                c.pr.params.contains("tag") ? param_string(c, "tag") : std::string("z")};
  TrunkPoint q = push_p(pt, c.pr.p);
  return {{"center_mag", to_json(q.center_mag)}, {"radius", to_json(q.radius)}, {"center_tag", q.center_tag}};
}

json cmd_harm(Context& c) {
  HarmStructure H = harm_group(need_graph(c), param_int(c, "n", c.pr.p));
  json gens = json::array();
  for (const auto& g : H.generators) gens.push_back(to_json(g));
  return {{"n", H.n}, {"factors", H.factors}, {"order", harm_order(H)}, {"generators", gens}};
}

json cmd_theta(Context& c) {
  std::map<std::string, std::int64_t> degrees;
  for (const auto& [k, v] : param(c, "degrees").items()) {
    if (!v.is_number_integer()) throw std::invalid_argument("params.degrees." + k + ": expected an integer");
    degrees[k] = v.get<std::int64_t>();
  }
  ThetaResult t = theta_assemble(need_graph(c), degrees, param_int(c, "n", c.pr.p));
  return {{"cochain", to_json(t.cochain)}, {"harmonic", t.harmonic}};
}

json cmd_bridge(Context& c) {
  const SemiGraph& G = need_graph(c);
  std::int64_t n = param_int(c, "n", c.pr.p);
  SemiGraph T = truncate(G);
  std::vector<std::string> names;
  if (c.pr.params.contains("edge")) {
    names.push_back(param_string(c, "edge"));
  } else {
    for (const auto& e : G.edges()) names.push_back(e.name);
  }
  json out = json::object();
  for (const auto& name : names) {
    json row{{"bridge", is_bridge(G, name)}};
    row["eval_surjective"] = T.has_edge(name) ? json(eval_surjective(G, n, name)) : json(nullptr);
    out[name] = row;
  }
  return {{"edges", out}};
}

json cmd_split_locus(Context& c) {
  return {{"locus", to_json(split_locus(need_newton(c), need_annulus(c).interval, c.pr.p))}};
}

json cmd_split_verdict(Context& c) {
  TorsorClass tc = torsor(c);
  json j{{"cochain_value", cochain_value(tc)}};
  Verdict v;
  if (c.pr.params.contains("rho")) {
    RigidPoint alpha = RigidPoint::at(c.pr.p, param_rational(c, "m"));
    v = split_verdict_rigid(tc, alpha, param_rational(c, "rho"), c.pr.p, max_iter(c));
  } else {
    v = split_verdict_at(tc, param_rational(c, "lambda"), c.pr.p, max_iter(c));
  }
  c.unknown = v.is(VerdictKind::Unknown);
  j.update(verdict_json(v));
  return j;
}

// Random coefficient-level mu_p classes on (-3, 0), dominant term of degree 0.
json random_radii(Context& c, std::int64_t count) {
  std::mt19937_64 rng(*c.opt.seed);
  std::int64_t p = c.pr.p;
  Annulus A(LogInterval::open(Rational(-3), Rational(0)));
  json rows = json::array();
  for (std::int64_t i = 0; i < count; ++i) {
    std::map<std::int64_t, Rational> co{{0, Rational(1)}};
    for (std::int64_t k : {-1, 1, 2}) {
      long e = static_cast<long>(std::uniform_int_distribution<int>(1, 4)(rng));
      long u = static_cast<long>(std::uniform_int_distribution<int>(1, static_cast<int>(p) * 3)(rng));
      if (u % p == 0) ++u;
      Integer pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? e + 3 : e));
      co[k] = Rational(Integer(u) * pe);
    }
    LaurentExt g = LaurentExt::from_rationals(p, co);
    TorsorClass tc(p, g, A);
    RadiusBound rb = split_radius_rigid(tc, RigidPoint::at(p, Rational(-1)), p);
    json row{{"laurent", json::array()}, {"radius", radius_json(rb)}};
    for (const auto& [k, q] : co) row["laurent"].push_back(json::array({k, to_string(q)}));
    rows.push_back(row);
  }
  return rows;
}

json cmd_split_radius(Context& c) {
  json j = json::object();
  if (c.pr.params.contains("random_classes")) {
    if (!c.opt.seed) throw std::invalid_argument("random_classes needs --seed");
    j["random"] = random_radii(c, param_int(c, "random_classes"));
    return j;
  }
  if (c.pr.params.contains("h")) {
    j["power_radius"] = to_json(split_radius_power(c.pr.p, static_cast<int>(param_int(c, "h")), param_rational(c, "m")));
    return j;
  }
  TorsorClass tc = torsor(c);
  RigidPoint alpha = RigidPoint::at(c.pr.p, param_rational(c, "m"));
  j["cochain_value"] = cochain_value(tc);
  j["radius"] = radius_json(split_radius_rigid(tc, alpha, c.pr.p, static_cast<int>(param_int(c, "i_max", kDefaultIMax)), max_iter(c)));
  j["minimal"] = to_json(Rational(alpha.m + Thresholds::for_prime(c.pr.p).tau));
  return j;
}

json cmd_annulus_iso(Context& c) {
  const Annulus& A = need_annulus(c);
  Annulus B = parse_annulus(param(c, "other"));
  return {{"isomorphic", is_isomorphic(A, B)}, {"length_a", length_json(length(A))}, {"length_b", length_json(length(B))}};
}

json localization_json(const Localization& loc) {
  json j{{"lo", to_json(loc.lo)}, {"hi", length_json(loc.hi)}, {"saturated", loc.saturated}};
  j["width"] = length_json(loc.width());
  return j;
}

json cmd_length_localize(Context& c) {
  Length l = param_extended(c, "length");
  std::int64_t nm = n_max(c);
  ThresholdProfile prof = profile_direct(l, c.pr.p, nm);
  json passed = json::array();
  for (const auto& [N, ok] : prof.passed) passed.push_back(json::array({N, ok}));
  json j{{"length", length_json(l)}, {"n_max", nm}, {"profile", passed}, {"interval", localization_json(localize(prof))}};
  if (l) {
    Annulus A(LogInterval::open(Rational(-*l), Rational(0)));
    j["from_torsors_agrees"] = profile_from_torsors(A, c.pr.p, nm) == prof;
  } else {
    j["from_torsors_agrees"] = nullptr;
  }
  return j;
}

json cmd_thm1_sweep(Context& c) {
  Rational top = c.pr.params.contains("max") ? param_rational(c, "max") : Rational(20);
  Rational step = c.pr.params.contains("step") ? param_rational(c, "step") : Rational(1, 8);
  if (step <= 0 || top <= 0) throw std::invalid_argument("params.step and params.max must be positive");
  std::int64_t nm = n_max(c);
  std::vector<Length> grid;
  for (Rational l = step; l <= top; l += step) grid.push_back(l);
  if (c.pr.params.value("include_infinite", false)) grid.push_back(std::nullopt);
  json rows = json::array();
  std::size_t equal = 0, violations = 0, findings = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t k = i + 1; k < grid.size(); ++k) {
      PairReport r = pair_report(grid[i], grid[k], c.pr.p, nm);
      equal += r.profiles_equal;
      violations += !r.bound_ok;
      findings += r.findings.size();
      json row{{"l1", length_json(r.l1)}, {"l2", length_json(r.l2)}, {"equal", r.profiles_equal}, {"bound_ok", r.bound_ok}};
      if (!r.findings.empty()) row["findings"] = r.findings;
      rows.push_back(row);
    }
  return {{"pairs", rows.size()}, {"equal_pairs", equal}, {"violations", violations}, {"findings", findings}, {"rows", rows}, {"n_max", nm}};
}

json cmd_witness(Context& c) {
  std::string kind = param_string(c, "kind");
  if (kind == "skeleton") {
    SkeletonWitness w = witness_skeleton_solvable(param_rational(c, "lambda"), c.pr.p);
    return {{"kind", kind}, {"rescale", to_json(w.rescale)}, {"delta", to_json(w.delta)},
            {"count_at", w.count_at.get_str()}, {"count_below", w.count_below.get_str()}};
  }
  if (kind != "threshold") throw std::invalid_argument("params.kind: expected \"threshold\" or \"skeleton\"");
  ThresholdWitness w = witness_threshold_solvable(need_graph(c), param_string(c, "edge"), need_annulus(c), c.pr.p,
                                                  param_rational(c, "m"));
  json probes = json::array();
  for (const auto& pr : w.probes) {
    json row = verdict_json(pr.verdict);
    row["radius"] = to_json(pr.radius);
    row["fiber"] = pr.fiber.get_str();
    probes.push_back(row);
  }
  return {{"kind", kind}, {"edge_value", w.edge_value}, {"threshold_radius", to_json(w.threshold.radius)},
          {"probes", probes}, {"verified", w.verified}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"eval", cmd_eval},
      {"dominant", cmd_dominant},
      {"fibers", cmd_fibers},
      {"fiber-tree", cmd_fiber_tree},
      {"push", cmd_push},
      {"harm", cmd_harm},
      {"theta", cmd_theta},
      {"bridge", cmd_bridge},
      {"split-locus", cmd_split_locus},
      {"split-verdict", cmd_split_verdict},
      {"split-radius", cmd_split_radius},
      {"annulus-iso", cmd_annulus_iso},
      {"length-localize", cmd_length_localize},
      {"thm1-sweep", cmd_thm1_sweep},
      {"witness-solvable", cmd_witness},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, h] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

int run_command(const std::string& name, const json& doc, const Options& opt, std::ostream& out, std::ostream& err) {
  auto it = handlers().find(name);
  if (it == handlers().end()) {
    err << "unknown subcommand '" << name << "'\n";
    return kValidation;
  }
  try {
    Context ctx{parse_problem(doc), opt};
    if (name == "fiber-tree" && opt.tsv) {
      out << "radius\tcount\n";
      for (const auto& row : tree_rows(ctx)) out << to_string(row.radius) << '\t' << row.count.get_str() << '\n';
      return kOk;
    }
    json result = it->second(ctx);
    result["command"] = name;
    result["p"] = ctx.pr.p;
    out << result.dump(2) << '\n';
    return ctx.unknown && opt.strict ? kUnknownStrict : kOk;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
}

int run_text(const std::string& name, const std::string& text, const Options& opt, std::ostream& out,
             std::ostream& err) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
  return run_command(name, doc, opt, out, err);
}

}  // namespace annulab::cli
