#include <doctest.h>

#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "arrowribbon/duality.hpp"
#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/json_io.hpp"
#include "testing.hpp"

using namespace arrowribbon;
using namespace arrowribbon::testing;

namespace {

ArrowRibbonGraph load(const std::string& name) {
  std::ifstream in(std::string(ARROWRIBBON_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

// Tutte polynomial of an abstract multigraph by deletion-contraction.
LaurentPoly tutte_oracle(int nv, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return LaurentPoly(1);
  const auto [u, v] = edges.back();
  edges.pop_back();
  const LaurentPoly x = vars::named("x");
  const LaurentPoly y = vars::named("y");
  if (u == v) return y * tutte_oracle(nv, edges);
  auto contracted = edges;
  for (auto& [a, b] : contracted) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  // Bridge test: is v still reachable from u without the edge?
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  if (find(u) != find(v)) return x * tutte_oracle(nv, contracted);
  return tutte_oracle(nv, edges) + tutte_oracle(nv, contracted);
}

LaurentPoly tutte_oracle(const ArrowRibbonGraph& g) {
  std::vector<std::pair<int, int>> es;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    es.emplace_back(static_cast<int>(g.vertex_index_of_end(e, 0)), static_cast<int>(g.vertex_index_of_end(e, 1)));
  }
  return tutte_oracle(static_cast<int>(g.num_vertices()), es);
}

Substitution a_to_one() { return {{VarSymbol::plain(Family::a), LaurentPoly(1)}}; }

}  // namespace

TEST_CASE("arrow dichromatic of small graphs") {
  CHECK(format(arrow_dichromatic(single_vertex())) == "a*c");
  CHECK(format(arrow_dichromatic(single_vertex(arrows("W")))) == "a*c*K[1/2]");
  CHECK(arrow_dichromatic(single_loop(false)) == parse_poly("a*c + a*b[e]*c^2"));
  CHECK(arrow_dichromatic(single_loop(true)) == parse_poly("a*c + a*b[e]*c"));
  CHECK(arrow_dichromatic(ArrowRibbonGraph::from_rotation_system({}, {})) == LaurentPoly(1));
}

TEST_CASE("worked example graph") {
  const auto g = load("worked_example.json");
  const LaurentPoly expected = parse_poly(
      "a*b[2]*b[3]*c^2*K[1]^2 + a*b[3]*c*K[1] + a*b[2]*c*K[1] + a^2*c^2*K[1/2]^2 + a*b[1]*b[2]*b[3]*c*K[1] + "
      "a*b[1]*b[3]*c*K[1] + a*b[1]*b[2]*c + a^2*b[1]*c^2*K[1/2]^2");
  const LaurentPoly got = arrow_dichromatic(g);
  CHECK(format(got) == format(expected));
  CHECK(dichromatic(g) == drop_k_variables(expected));
}

TEST_CASE("dichromatic ignores arrows and multiplies over disjoint unions") {
  std::mt19937_64 rng(17);
  CHECK(format(dichromatic(single_vertex(arrows("W")))) == "a*c");
  for (int i = 0; i < 60; ++i) {
    RandomGraphOptions opt;
    opt.max_edges = 4;
    const auto g1 = random_graph(rng, opt);
    const auto g2 = random_graph(rng, opt);
    const auto u = disjoint_union(g1, g2);
    CHECK(arrow_dichromatic(u) == arrow_dichromatic(g1) * arrow_dichromatic(disjoint_union(ArrowRibbonGraph(), g2)));
    CHECK(dichromatic(u) == dichromatic(g1) * dichromatic(disjoint_union(ArrowRibbonGraph(), g2)));
  }
}

TEST_CASE("thread count does not change results") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(rng);
    const std::string one = format(arrow_dichromatic(g, {1}));
    CHECK(format(arrow_dichromatic(g, {3})) == one);
    CHECK(format(arrow_dichromatic(g, {0})) == one);
    CHECK(k_indices_positive(arrow_dichromatic(g)));
  }
}

TEST_CASE("tutte") {
  CHECK(tutte(cycle_graph(3)) == parse_poly("x^2 + x + y"));
  const auto br = ArrowRibbonGraph::from_rotation_system({Vertex{"u", {entry("e.0")}, {}}, Vertex{"w", {entry("e.1")}, {}}},
                                                         {edge("e")});
  CHECK(format(tutte(br)) == "x");
  CHECK(format(tutte(single_loop(true))) == "y");
  CHECK(tutte(theta()) == parse_poly("x + y + y^2"));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng);
    CHECK(tutte(g) == tutte_oracle(g));
  }
}

TEST_CASE("arrow Bollobas-Riordan") {
  CHECK(arrow_bollobas_riordan(single_vertex(), {}) == LaurentPoly(1));
  CHECK(arrow_bollobas_riordan(single_loop(false), unit_weights(single_loop(false))) == parse_poly("1 + Y"));
  CHECK(arrow_bollobas_riordan(single_loop(true), unit_weights(single_loop(true))) == parse_poly("1 + Y*Z"));
  CHECK(arrow_bollobas_riordan(single_loop(true), {}) == parse_poly("y[e] + x[e]*Y*Z"));
}

TEST_CASE("signed Bollobas-Riordan") {
  auto negative_bridge = ArrowRibbonGraph::from_rotation_system(
      {Vertex{"u", {entry("e.0")}, {}}, Vertex{"w", {entry("e.1")}, {}}}, {edge("e")});
  CHECK_THROWS_AS(signed_bollobas_riordan(negative_bridge), Error);
  auto es = negative_bridge.edges();
  es[0].sign = Sign::Minus;
  negative_bridge = ArrowRibbonGraph::from_rotation_system(negative_bridge.vertices(), es);
  CHECK(signed_bollobas_riordan(negative_bridge) == parse_poly("X^1/2*Y^1/2 + X^1/2*Y^-1/2"));

  std::mt19937_64 rng(29);
  RandomGraphOptions opt;
  opt.signs = true;
  for (int i = 0; i < 60; ++i) {
    const auto g = random_graph(rng, opt);
    WeightMap w;
    for (const auto& e : g.edges()) {
      if (*e.sign == Sign::Plus) {
        w[e.id] = {LaurentPoly(1), LaurentPoly(1)};
      } else {
        w[e.id] = {vars::X(2) * vars::Y(-2), vars::Y(2) * vars::X(-2)};
      }
    }
    CHECK(signed_bollobas_riordan(g) == arrow_bollobas_riordan(g, w));
    bool all_plus = true;
    for (const auto& e : g.edges()) all_plus = all_plus && *e.sign == Sign::Plus;
    if (all_plus) CHECK(signed_bollobas_riordan(g) == arrow_bollobas_riordan(g, unit_weights(g)));
  }
}

TEST_CASE("BR and Z relation") {
  CHECK(verify_br_z_relation(single_vertex(), {}));
  CHECK(verify_br_z_relation(ArrowRibbonGraph(), {}));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> expo(-2, 2);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_graph(rng);
    CHECK(verify_br_z_relation(g, {}));
    WeightMap w;
    for (const auto& e : g.edges()) {
      w[e.id] = {vars::X(kWhole * expo(rng)) * LaurentPoly(2), vars::Y(kWhole * expo(rng)) * LaurentPoly(-1)};
    }
    CHECK(verify_br_z_relation(g, w));
    if (g.num_edges() > 0) {
      WeightMap perturbed = w;
      perturbed.begin()->second.first *= vars::Z();
      CHECK_FALSE(br_z_relation(g, w, perturbed).equal);
    }
  }
  WeightMap bad{{"e", {LaurentPoly(1), vars::Y() + LaurentPoly(1)}}};
  CHECK_THROWS_AS(verify_br_z_relation(single_loop(false), bad), Error);
}

TEST_CASE("signed dichromatic substitution") {
  auto bridge = ArrowRibbonGraph::from_rotation_system({Vertex{"u", {entry("e.0")}, {}}, Vertex{"w", {entry("e.1")}, {}}},
                                                       {edge("e")});
  CHECK_THROWS_AS(signed_dichromatic_substitution(bridge), Error);
  auto es = bridge.edges();
  es[0].sign = Sign::Plus;
  bridge = ArrowRibbonGraph::from_rotation_system(bridge.vertices(), es);
  CHECK(signed_dichromatic_substitution(bridge, LaurentPoly(1)) == parse_poly("q^3/2*alpha[e] + q^1/2*alpha[e]^2"));
  CHECK(signed_dichromatic_substitution(bridge) == parse_poly("q^3/2*alpha[e]*c^2 + q^1/2*alpha[e]^2*c"));
  CHECK(signed_dichromatic_substitution(ArrowRibbonGraph()) == LaurentPoly(1));

  // Flipping the sign of e acts as alpha_e -> q/alpha_e up to alpha_e^2/q.
  std::mt19937_64 rng(37);
  RandomGraphOptions opt;
  opt.signs = true;
  for (int i = 0; i < 40; ++i) {
    const auto g = random_graph(rng, opt);
    if (g.num_edges() == 0) continue;
    auto flipped_edges = g.edges();
    auto& e = flipped_edges[0];
    e.sign = *e.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
    for (auto& x : flipped_edges) x.end0 = x.end1 = {};
    const auto flipped = ArrowRibbonGraph::from_rotation_system(g.vertices(), flipped_edges);
    const LaurentPoly al = vars::alpha(e.id);
    const LaurentPoly plus = signed_dichromatic_substitution(*g.edges()[0].sign == Sign::Plus ? g : flipped);
    const LaurentPoly minus = signed_dichromatic_substitution(*g.edges()[0].sign == Sign::Plus ? flipped : g);
    const LaurentPoly swapped =
        substitute(plus, {{VarSymbol::edge(Family::alpha, e.id), vars::q() * LaurentPoly(Monomial::var(VarSymbol::edge(Family::alpha, e.id), -kWhole))}});
    CHECK(minus == al * al * vars::q(-kWhole) * swapped);
  }
}

TEST_CASE("contraction-deletion") {
  std::mt19937_64 rng(41);
  RandomGraphOptions opt;
  opt.max_edges = 5;
  int orientable_checked = 0;
  for (int i = 0; i < 120; ++i) {
    const auto g = random_graph(rng, opt);
    const LaurentPoly ag = arrow_dichromatic(g);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const std::string id = g.edges()[e].id;
      const LaurentPoly del = arrow_dichromatic(delete_edge(g, id));
      const LaurentPoly con = arrow_dichromatic(contract(g, id));
      const LaurentPoly b = vars::b(id);
      if (!is_orientable_loop(g, e)) {
        CHECK(ag == del + b * con);
      } else if (is_trivial_orientable_loop(g, e)) {
        ++orientable_checked;
        CHECK(ag * vars::a() == del * vars::a() + b * con);
      }
      CHECK(substitute(ag, a_to_one()) == substitute(del + b * con, a_to_one()));
    }
  }
  CHECK(orientable_checked > 0);
}

TEST_CASE("partial duality at a = 1") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_graph(rng);
    const auto d = random_subset(rng, g.num_edges());
    Substitution sigma = a_to_one();
    LaurentPoly prefactor(1);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!d[e]) continue;
      const VarSymbol b = VarSymbol::edge(Family::b, g.edges()[e].id);
      sigma[b] = LaurentPoly(Monomial::var(b, -kWhole));
      prefactor *= vars::b(g.edges()[e].id);
    }
    CHECK(substitute(arrow_dichromatic(g), a_to_one()) == prefactor * substitute(arrow_dichromatic(partial_dual(g, d)), sigma));
  }
}
