#include "annulab/cli/json_io.hpp"

#include <stdexcept>

namespace annulab::cli {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& why) {
  throw std::invalid_argument(what + ": " + why);
}

std::int64_t integer_field(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

const json& require(const json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) fail(key, "missing required field");
  return obj.at(key);
}

Rational rational_field(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(what, "expected a rational string \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(what, e.what());
  }
}

std::optional<Rational> extended_field(const json& j, const std::string& what) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf" || s == "-inf" || s == "+inf") return std::nullopt;
  }
  return rational_field(j, what);
}

Annulus parse_annulus(const json& j) {
  if (!j.is_object()) fail("annulus", "expected an object");
  auto lo = extended_field(require(j, "lo"), "annulus.lo");
  auto hi = extended_field(require(j, "hi"), "annulus.hi");
  bool lc = j.value("lo_closed", false);
  bool hc = j.value("hi_closed", false);
  int orientation = j.contains("orientation") ? static_cast<int>(integer_field(j.at("orientation"), "annulus.orientation")) : 1;
  if (lo && hi && *lo > *hi) fail("annulus", "lo exceeds hi");
  LogInterval I(lo, lc, hi, hc);
  if (I.is_empty()) fail("annulus", "interval is empty");
  if (orientation != 1 && orientation != -1) fail("annulus.orientation", "must be 1 or -1");
  return Annulus(I, orientation);
}

NewtonData parse_newton(const json& j) {
  if (!j.is_array() || j.empty()) fail("newton", "expected a non-empty list of [degree, \"log-magnitude\"]");
  NewtonData nd;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail("newton", "each term is [degree, \"a/b\"]");
    std::int64_t d = integer_field(t[0], "newton degree");
    if (nd.terms().count(d)) fail("newton", "repeated degree " + std::to_string(d));
    nd.set(d, rational_field(t[1], "newton log-magnitude"));
  }
  return nd;
}

LaurentExt parse_laurent(const json& j, std::int64_t p) {
  if (!j.is_array() || j.empty()) fail("laurent", "expected a non-empty list of [degree, \"coefficient\"]");
  LaurentExt L(p);
  std::map<std::int64_t, bool> seen;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail("laurent", "each term is [degree, \"a/b\"]");
    std::int64_t d = integer_field(t[0], "laurent degree");
    if (seen[d]) fail("laurent", "repeated degree " + std::to_string(d));
    seen[d] = true;
    Rational c = rational_field(t[1], "laurent coefficient");
    if (c == 0) fail("laurent", "zero coefficient at degree " + std::to_string(d));
    L.add_term(d, ExtScalar::from_rational(p, c));
  }
  return L;
}

SemiGraph parse_semigraph(const json& j) {
  if (!j.is_object()) fail("semigraph", "expected an object");
  std::vector<std::string> vertices;
  for (const auto& v : require(j, "vertices")) {
    if (!v.is_string()) fail("semigraph.vertices", "vertex names are strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : require(j, "edges")) {
    Edge edge;
    const json& name = require(e, "name");
    if (!name.is_string()) fail("semigraph.edges", "edge names are strings");
    edge.name = name.get<std::string>();
    auto branch = [&](const char* key) -> std::optional<std::string> {
      const json& b = require(e, key);
      if (b.is_null()) return std::nullopt;
      if (!b.is_string()) fail("semigraph.edges", std::string(key) + " is a vertex name or null");
      return b.get<std::string>();
    };
    edge.tail = branch("from");
    edge.head = branch("to");
    edges.push_back(std::move(edge));
  }
  return SemiGraph(std::move(vertices), std::move(edges));
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  if (integer_field(require(doc, "schema"), "schema") != kSchemaVersion)
    fail("schema", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  static const char* known[] = {"schema", "p", "annulus", "newton", "laurent", "semigraph", "params"};
  for (const auto& [k, v] : doc.items()) {
    bool ok = false;
    for (const char* n : known) ok = ok || k == n;
    if (!ok) fail(k, "unknown field");
  }
  Problem pr;
  pr.p = integer_field(require(doc, "p"), "p");
  if (!is_prime(pr.p)) fail("p", "must be prime");
  if (doc.contains("annulus")) pr.annulus = parse_annulus(doc.at("annulus"));
  if (doc.contains("newton")) pr.newton = parse_newton(doc.at("newton"));
  if (doc.contains("laurent")) pr.laurent = parse_laurent(doc.at("laurent"), pr.p);
  if (doc.contains("semigraph")) pr.semigraph = parse_semigraph(doc.at("semigraph"));
  if (doc.contains("params")) {
    if (!doc.at("params").is_object()) fail("params", "expected an object");
    pr.params = doc.at("params");
  }
  return pr;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const LogMag& m) { return to_string(m); }

json to_json(const LogInterval& I) {
  if (I.is_empty()) return json{{"empty", true}};
  return json{{"lo", I.lo() ? to_string(*I.lo()) : "-inf"},
              {"hi", I.hi() ? to_string(*I.hi()) : "inf"},
              {"lo_closed", I.lo_closed()},
              {"hi_closed", I.hi_closed()}};
}

json to_json(const Annulus& A) {
  json j = to_json(A.interval);
  j["orientation"] = A.orientation;
  return j;
}

json to_json(const NewtonData& nd) {
  json arr = json::array();
  for (const auto& [d, c] : nd.terms()) arr.push_back(json::array({d, to_string(c)}));
  return arr;
}

json to_json(const Cochain& c) {
  json values = json::object();
  for (const auto& [e, v] : c.values) values[e] = v;
  return json{{"n", c.n}, {"values", values}};
}

}  // namespace annulab::cli
