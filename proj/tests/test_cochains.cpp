#include "helpers.hpp"

#include <doctest.h>

using namespace testing_support;

namespace {

Edge E(std::string name, std::optional<std::string> t, std::optional<std::string> h) {
  return Edge{std::move(name), std::move(t), std::move(h)};
}

// Harmonicity straight from the definition: signed vertex sums vanish mod n.
bool harmonic_by_definition(const SemiGraph& G, const std::vector<std::int64_t>& vals, std::int64_t n) {
  std::map<std::string, std::int64_t> sum;
  for (std::size_t i = 0; i < G.edges().size(); ++i) {
    const Edge& e = G.edges()[i];
    if (e.head) sum[*e.head] += vals[i];
    if (e.tail) sum[*e.tail] -= vals[i];
  }
  for (const auto& [v, s] : sum)
    if (((s % n) + n) % n != 0) return false;
  return true;
}

std::uint64_t brute_force_count(const SemiGraph& G, std::int64_t n) {
  std::size_t k = G.edges().size();
  std::vector<std::int64_t> vals(k, 0);
  std::uint64_t count = 0;
  while (true) {
    if (harmonic_by_definition(G, vals, n)) ++count;
    std::size_t i = 0;
    while (i < k && ++vals[i] == n) vals[i++] = 0;
    if (i == k) break;
  }
  return count;
}

// All harmonic assignments vanish on edge e.
bool brute_force_vanishes(const SemiGraph& G, std::int64_t n, std::size_t e) {
  std::size_t k = G.edges().size();
  std::vector<std::int64_t> vals(k, 0);
  while (true) {
    if (vals[e] != 0 && harmonic_by_definition(G, vals, n)) return false;
    std::size_t i = 0;
    while (i < k && ++vals[i] == n) vals[i++] = 0;
    if (i == k) break;
  }
  return true;
}

std::vector<SemiGraph> suite() {
  std::vector<SemiGraph> gs;
  gs.emplace_back(std::vector<std::string>{}, std::vector<Edge>{E("e", std::nullopt, std::nullopt)});
  gs.emplace_back(std::vector<std::string>{"v"}, std::vector<Edge>{E("e", "v", std::nullopt)});
  gs.emplace_back(std::vector<std::string>{"a", "b"}, std::vector<Edge>{E("e1", "a", "b"), E("e2", "a", "b")});
  gs.emplace_back(std::vector<std::string>{"a", "b", "c", "d"},
                  std::vector<Edge>{E("e1", "a", "b"), E("e2", "b", "c"), E("e3", "c", "d")});
  gs.emplace_back(std::vector<std::string>{"a", "b"},
                  std::vector<Edge>{E("e1", "a", "b"), E("e2", "b", "a"), E("e3", "a", "b")});
  gs.emplace_back(std::vector<std::string>{"a", "b", "c", "d"},
                  std::vector<Edge>{E("l1", "a", "b"), E("l2", "b", "a"), E("br", "b", "c"), E("r1", "c", "d"),
                                    E("r2", "d", "c")});
  gs.emplace_back(std::vector<std::string>{"v"}, std::vector<Edge>{E("loop", "v", "v"), E("cusp", "v", std::nullopt)});
  gs.emplace_back(std::vector<std::string>{"a", "b", "c"},
                  std::vector<Edge>{E("e1", "a", "b"), E("e2", "b", "c"), E("e3", "c", "a"), E("x", "a", std::nullopt),
                                    E("y", std::nullopt, std::nullopt), E("z", "b", "c")});
  return gs;
}

}  // namespace

TEST_CASE("harmonic groups of small graphs") {
  auto gs = suite();
  CHECK(harm_group(gs[0], 5).factors == std::vector<std::int64_t>{5});
  CHECK(harm_order(harm_group(gs[1], 7)) == 1);
  CHECK(harm_group(gs[2], 4).factors == std::vector<std::int64_t>{4});
  CHECK(harm_order(harm_group(gs[3], 6)) == 1);
}

TEST_CASE("harm_group matches brute force and generators are harmonic") {
  for (const auto& G : suite())
    for (std::int64_t n = 2; n <= 6; ++n) {
      HarmStructure H = harm_group(G, n);
      CHECK(harm_order(H) == brute_force_count(G, n));
      for (std::size_t i = 0; i < H.generators.size(); ++i) {
        CHECK(is_harmonic(G, H.generators[i]));
        // generator order divides its factor
        Cochain c = H.generators[i];
        for (auto& [k, v] : c.values) v = mod_n(v * H.factors[i], n);
        CHECK(c == Cochain::zero(G, n));
      }
    }
}

TEST_CASE("is_harmonic examples") {
  SemiGraph cyc({"a", "b"}, {E("e1", "a", "b"), E("e2", "b", "a")});
  CHECK(is_harmonic(cyc, Cochain::zero(cyc, 3)));
  CHECK(is_harmonic(cyc, Cochain{3, {{"e1", 1}, {"e2", 1}}}));
  SemiGraph par({"a", "b"}, {E("e1", "a", "b"), E("e2", "a", "b")});
  CHECK(is_harmonic(par, Cochain{3, {{"e1", 1}, {"e2", 2}}}));
  CHECK_FALSE(is_harmonic(par, Cochain{3, {{"e1", 1}, {"e2", 1}}}));
  CHECK_THROWS_AS(is_harmonic(par, Cochain{3, {{"e1", 1}, {"e2", 2}}}, 5), DomainError);
}

TEST_CASE("bridges") {
  auto gs = suite();
  CHECK(is_bridge(gs[3], "e2"));
  CHECK_FALSE(is_bridge(gs[2], "e1"));
  CHECK_FALSE(is_bridge(gs[0], "e"));
  CHECK(is_bridge(gs[5], "br"));
  CHECK_FALSE(is_bridge(gs[5], "l1"));
  CHECK_FALSE(is_bridge(gs[6], "loop"));
  CHECK_THROWS_AS(is_bridge(gs[3], "nope"), DomainError);
}

TEST_CASE("bridges carry no harmonic values on closed graphs") {
  for (const auto& G : suite()) {
    SemiGraph T = truncate(G);
    for (std::size_t i = 0; i < T.edges().size(); ++i)
      for (std::int64_t n = 2; n <= 4; ++n) {
        bool vanishes = brute_force_vanishes(T, n, i);
        if (is_bridge(T, T.edges()[i].name)) CHECK(vanishes);
        CHECK(eval_surjective(G, n, T.edges()[i].name) == !vanishes);
      }
  }
}

TEST_CASE("truncate and extend by zero") {
  auto gs = suite();
  CHECK(truncate(gs[0]).edges().empty());
  CHECK(truncate(gs[7]).edges().size() == 4);
  CHECK(truncate(gs[2]).edges().size() == 2);
  SemiGraph cusp({"a", "b"}, {E("e1", "a", "b"), E("e2", "b", "a"), E("c", "a", std::nullopt)});
  Cochain c{3, {{"e1", 1}, {"e2", 1}}};
  Cochain ext = extend_zero(c, cusp);
  CHECK(ext.values.at("c") == 0);
  CHECK(ext.values.at("e1") == 1);
  CHECK(is_harmonic(cusp, ext));
  CHECK(extend_zero(Cochain::zero(truncate(cusp), 3), cusp) == Cochain::zero(cusp, 3));
  CHECK_THROWS_AS(extend_zero(Cochain{3, {{"e1", 1}, {"e2", 2}}}, cusp), DomainError);
  for (const auto& G : suite())
    for (const auto& g : harm_group(truncate(G), 4).generators) CHECK(is_harmonic(G, extend_zero(g, G)));
}

TEST_CASE("evaluation surjectivity") {
  auto gs = suite();
  CHECK(eval_surjective(gs[2], 5, "e1"));
  CHECK_FALSE(eval_surjective(gs[5], 5, "br"));
  SemiGraph leaf({"a", "b"}, {E("e", "a", "b")});
  CHECK_FALSE(eval_surjective(leaf, 5, "e"));
  CHECK_THROWS_AS(eval_surjective(gs[0], 5, "e"), DomainError);
}

TEST_CASE("theta assembly") {
  SemiGraph par({"a", "b"}, {E("e1", "a", "b"), E("e2", "a", "b")});
  auto z = theta_assemble(par, {{"e1", 0}, {"e2", 0}}, 3);
  CHECK(z.cochain == Cochain::zero(par, 3));
  CHECK(z.harmonic);
  SemiGraph open({}, {E("e", std::nullopt, std::nullopt)});
  auto t = theta_assemble(open, {{"e", 5}}, 3);
  CHECK(t.cochain.values.at("e") == 2);
  CHECK(t.harmonic);
  auto bad = theta_assemble(par, {{"e1", 1}, {"e2", 1}}, 3);
  CHECK(bad.cochain.values.at("e1") == 1);
  CHECK_FALSE(bad.harmonic);
  CHECK(theta_assemble(par, {{"e1", 1}, {"e2", -1}}, 3).harmonic);
}
