#include "annulab/cochains.hpp"

#include "annulab/errors.hpp"
#include "annulab/smith.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace annulab {

SemiGraph::SemiGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> vs(vertices_.begin(), vertices_.end());
  if (vs.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex name");
  std::set<std::string> es;
  for (const auto& e : edges_) {
    if (!es.insert(e.name).second) throw std::invalid_argument("duplicate edge name '" + e.name + "'");
    for (const auto& b : {e.tail, e.head})
      if (b && !vs.count(*b))
        throw std::invalid_argument("edge '" + e.name + "' references unknown vertex '" + *b + "'");
  }
}

bool SemiGraph::has_edge(const std::string& name) const {
  for (const auto& e : edges_)
    if (e.name == name) return true;
  return false;
}

const Edge& SemiGraph::edge(const std::string& name) const {
  for (const auto& e : edges_)
    if (e.name == name) return e;
  throw DomainError(ErrorCode::UnknownEdge, "no edge named '" + name + "'");
}

std::size_t SemiGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  throw std::invalid_argument("no vertex named '" + name + "'");
}

std::int64_t mod_n(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

Cochain Cochain::zero(const SemiGraph& G, std::int64_t n) {
  Cochain c;
  c.n = n;
  for (const auto& e : G.edges()) c.values[e.name] = 0;
  return c;
}

namespace {

void require_modulus(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
}

// Vertex x sums the edges oriented towards it: +c(e) at the head, -c(e) at the tail.
IntMatrix incidence(const SemiGraph& G) {
  IntMatrix M(G.vertices().size(), std::vector<Integer>(G.edges().size(), 0));
  for (std::size_t j = 0; j < G.edges().size(); ++j) {
    const Edge& e = G.edges()[j];
    if (e.is_loop()) continue;
    if (e.head) M[G.vertex_index(*e.head)][j] += 1;
    if (e.tail) M[G.vertex_index(*e.tail)][j] -= 1;
  }
  return M;
}

}  // namespace

HarmStructure harm_group(const SemiGraph& G, std::int64_t n) {
  require_modulus(n);
  HarmStructure H;
  H.n = n;
  const std::size_t rows = G.vertices().size();
  const std::size_t cols = G.edges().size();
  SmithForm S = smith_normal_form(incidence(G), rows, cols);
  Integer nn(static_cast<long>(n));
  for (std::size_t i = 0; i < cols; ++i) {
    Integer g = nn;
    if (i < S.diag.size()) mpz_gcd(g.get_mpz_t(), S.diag[i].get_mpz_t(), nn.get_mpz_t());
    if (g == 1) continue;
    Integer scale = nn / g;
    Cochain c;
    c.n = n;
    for (std::size_t k = 0; k < cols; ++k) {
      Integer v = S.W[k][i] * scale;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), nn.get_mpz_t());
      c.values[G.edges()[k].name] = r.get_si();
    }
    H.factors.push_back(g.get_si());
    H.generators.push_back(std::move(c));
  }
  return H;
}

std::uint64_t harm_order(const HarmStructure& H) {
  std::uint64_t order = 1;
  for (auto f : H.factors) order *= static_cast<std::uint64_t>(f);
  return order;
}

bool is_harmonic(const SemiGraph& G, const Cochain& c) {
  require_modulus(c.n);
  std::vector<std::int64_t> sums(G.vertices().size(), 0);
  for (const auto& e : G.edges()) {
    auto it = c.values.find(e.name);
    if (it == c.values.end()) throw std::invalid_argument("cochain has no value on edge '" + e.name + "'");
    if (e.is_loop()) continue;
    if (e.head) sums[G.vertex_index(*e.head)] += it->second;
    if (e.tail) sums[G.vertex_index(*e.tail)] -= it->second;
  }
  for (auto s : sums)
    if (mod_n(s, c.n) != 0) return false;
  return true;
}

bool is_harmonic(const SemiGraph& G, const Cochain& c, std::int64_t n) {
  if (c.n != n)
    throw DomainError(ErrorCode::ModulusMismatch,
                      "cochain modulus " + std::to_string(c.n) + " vs " + std::to_string(n));
  return is_harmonic(G, c);
}

bool is_bridge(const SemiGraph& G, const std::string& name) {
  const Edge& e = G.edge(name);
  if (!e.is_closed() || e.is_loop()) return false;
  const std::size_t nv = G.vertices().size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : G.edges()) {
    if (f.name == name || !f.is_closed()) continue;
    parent[find(G.vertex_index(*f.tail))] = find(G.vertex_index(*f.head));
  }
  return find(G.vertex_index(*e.tail)) != find(G.vertex_index(*e.head));
}

SemiGraph truncate(const SemiGraph& G) {
  std::vector<Edge> kept;
  for (const auto& e : G.edges())
    if (e.is_closed()) kept.push_back(e);
  return SemiGraph(G.vertices(), kept);
}

Cochain extend_zero(const Cochain& c, const SemiGraph& G) {
  SemiGraph T = truncate(G);
  for (const auto& [name, v] : c.values)
    if (!T.has_edge(name)) throw DomainError(ErrorCode::UnknownEdge, "'" + name + "' is not an edge of the truncation");
  if (!is_harmonic(T, c)) throw DomainError(ErrorCode::NotHarmonic, "input cochain is not harmonic on the truncation");
  Cochain out = Cochain::zero(G, c.n);
  for (const auto& [name, v] : c.values) out.values[name] = mod_n(v, c.n);
  return out;
}

bool eval_surjective(const SemiGraph& G, std::int64_t n, const std::string& e) {
  SemiGraph T = truncate(G);
  if (!T.has_edge(e)) throw DomainError(ErrorCode::UnknownEdge, "'" + e + "' is not an edge of the truncation");
  for (const auto& gen : harm_group(T, n).generators)
    if (gen.values.at(e) != 0) return true;
  return false;
}

ThetaResult theta_assemble(const SemiGraph& G, const std::map<std::string, std::int64_t>& degrees,
                           std::int64_t n) {
  require_modulus(n);
  Cochain c;
  c.n = n;
  for (const auto& e : G.edges()) {
    auto it = degrees.find(e.name);
    if (it == degrees.end()) throw std::invalid_argument("no degree for edge '" + e.name + "'");
    c.values[e.name] = mod_n(it->second, n);
  }
  for (const auto& [name, d] : degrees)
    if (!G.has_edge(name)) throw DomainError(ErrorCode::UnknownEdge, "no edge named '" + name + "'");
  bool h = is_harmonic(G, c);
  return {std::move(c), h};
}

}  // namespace annulab
