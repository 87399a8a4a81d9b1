#pragma once

// Semi-graphs, harmonic Z/nZ-cochains and the theta-cochain of per-edge degrees.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace annulab {

/// An edge with two branches; a branch is either attached to a vertex or open.
/// The reference orientation runs from tail to head.
struct Edge {
  std::string name;
  std::optional<std::string> tail;
  std::optional<std::string> head;

  bool is_closed() const { return tail && head; }
  bool is_loop() const { return tail && head && *tail == *head; }
};

class SemiGraph {
 public:
  SemiGraph() = default;
  /// Throws std::invalid_argument on duplicate names or dangling branches.
  SemiGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(const std::string& name) const;
  const Edge& edge(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Edge values in Z/nZ (as 0..n-1) in each edge's reference orientation.
struct Cochain {
  std::int64_t n = 2;
  std::map<std::string, std::int64_t> values;

  static Cochain zero(const SemiGraph& G, std::int64_t n);
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

std::int64_t mod_n(std::int64_t x, std::int64_t n);

struct HarmStructure {
  std::int64_t n = 2;
  std::vector<std::int64_t> factors;  // order of each generator, all > 1
  std::vector<Cochain> generators;
};

HarmStructure harm_group(const SemiGraph& G, std::int64_t n);
/// Total number of harmonic cochains, the product of the factors.
std::uint64_t harm_order(const HarmStructure& H);

bool is_harmonic(const SemiGraph& G, const Cochain& c);
/// Also checks the cochain's modulus; throws ModulusMismatch.
bool is_harmonic(const SemiGraph& G, const Cochain& c, std::int64_t n);

/// Throws UnknownEdge.
bool is_bridge(const SemiGraph& G, const std::string& e);

SemiGraph truncate(const SemiGraph& G);

/// Throws NotHarmonic when c is not harmonic on truncate(G).
Cochain extend_zero(const Cochain& c, const SemiGraph& G);

/// Some harmonic cochain on truncate(G) is nonzero at e. Throws UnknownEdge.
bool eval_surjective(const SemiGraph& G, std::int64_t n, const std::string& e);

struct ThetaResult {
  Cochain cochain;
  bool harmonic;
};

ThetaResult theta_assemble(const SemiGraph& G, const std::map<std::string, std::int64_t>& degrees,
                           std::int64_t n);

}  // namespace annulab
