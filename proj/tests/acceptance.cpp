// Acceptance run: one PASS/FAIL line per criterion, with a runtime limit each.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "arrowribbon/duality.hpp"
#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/json_io.hpp"
#include "arrowribbon/transfer.hpp"
#include "arrowribbon/vlink.hpp"
#include "links.hpp"
#include "testing.hpp"

using namespace arrowribbon;
using namespace arrowribbon::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Counts instances; the first failure is kept for the report.
struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  Outcome outcome(const std::string& unit) const {
    Outcome o;
    o.ok = passed == total && total > 0;
    o.detail = std::to_string(passed) + "/" + std::to_string(total) + " " + unit;
    if (!first_failure.empty()) o.detail += "; first failure: " + first_failure;
    return o;
  }
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s [%s] (%.2fs, limit %.0fs%s)\n", id, pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), secs, limit_s, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

ArrowRibbonGraph load(const std::string& name) {
  std::ifstream in(std::string(ARROWRIBBON_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

std::string form(const ArrowRibbonGraph& g) {
  CanonicalOptions opt;
  opt.keep_edge_ids = true;
  opt.max_edges = 0;
  return canonical_form(g, opt);
}

EdgeSubset xor_of(const EdgeSubset& a, const EdgeSubset& b) {
  EdgeSubset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] != b[i];
  return out;
}

RandomGraphOptions graph_options(int max_edges, bool signs = false) {
  RandomGraphOptions opt;
  opt.max_vertices = 4;
  opt.max_edges = max_edges;
  opt.signs = signs;
  return opt;
}

Substitution a_to_one() { return {{VarSymbol::plain(Family::a), LaurentPoly(1)}}; }

Outcome worked_example() {
  const LaurentPoly expected = parse_poly(
      "a*b[2]*b[3]*c^2*K[1]^2 + a*b[3]*c*K[1] + a*b[2]*c*K[1] + a^2*c^2*K[1/2]^2 + a*b[1]*b[2]*b[3]*c*K[1] + "
      "a*b[1]*b[3]*c*K[1] + a*b[1]*b[2]*c + a^2*b[1]*c^2*K[1/2]^2");
  const LaurentPoly got = arrow_dichromatic(load("worked_example.json"));
  Outcome o;
  o.ok = format(got) == format(expected) && got.terms().size() == 8;
  o.detail = format(got);
  return o;
}

Outcome intro_values() {
  const std::string t = format(tutte(cycle_graph(3)));
  const std::string j = format(jones(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")));
  Outcome o;
  o.ok = t == format(parse_poly("x^2 + x + y")) && j == format(parse_poly("t + t^3 - t^4"));
  o.detail = "tutte(C3) = " + t + ", jones(trefoil) = " + j;
  return o;
}

Outcome duality_suite() {
  std::mt19937_64 rng(101);
  Tally tally;
  const int graphs = 200;
  for (int i = 0; i < graphs; ++i) {
    const auto g = random_graph(rng, graph_options(8, true));
    const std::string base = form(g);
    const std::size_t n = g.num_edges();
    const Connectivity conn = connectivity(g, g.full_subset());
    const std::string tag = "graph " + std::to_string(i);
    tally.check(form(partial_dual(g, g.empty_subset())) == base, tag + " (a)");
    tally.check(form(partial_dual(g, g.full_subset())) == form(natural_dual(g)), tag + " (b)");
    tally.check(form(natural_dual(natural_dual(g))) == base, tag + " (c) G** = G");
    for (int k = 0; k < 6; ++k) {
      const EdgeSubset d = random_subset(rng, n);
      const EdgeSubset d2 = random_subset(rng, n);
      const auto gd = partial_dual(g, d);
      tally.check(form(partial_dual(gd, d)) == base, tag + " (c) (G^D)^D = G");
      tally.check(form(partial_dual(gd, d2)) == form(partial_dual(g, xor_of(d, d2))), tag + " (c) xor");
      const Connectivity cd = connectivity(gd, gd.full_subset());
      tally.check(cd.orientable == conn.orientable, tag + " (d)");
      tally.check(cd.components == conn.components, tag + " (e)");
    }
  }
  return tally.outcome("instances over " + std::to_string(graphs) + " graphs");
}

Outcome contraction_deletion() {
  std::mt19937_64 rng(103);
  Tally tally;
  std::size_t plain = 0, trivial_loops = 0, nontrivial_loops = 0;
  const int graphs = 200;
  for (int i = 0; i < graphs; ++i) {
    const auto g = random_graph(rng, graph_options(7));
    const LaurentPoly ag = arrow_dichromatic(g);
    const LaurentPoly ag1 = substitute(ag, a_to_one());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const std::string& id = g.edges()[e].id;
      const LaurentPoly del = arrow_dichromatic(delete_edge(g, id));
      const LaurentPoly con = arrow_dichromatic(contract(g, id));
      const LaurentPoly b = vars::b(id);
      const std::string tag = "graph " + std::to_string(i) + " edge " + id;
      if (!is_orientable_loop(g, e)) {
        ++plain;
        tally.check(ag == del + b * con, tag + " first case");
      } else if (is_trivial_orientable_loop(g, e)) {
        ++trivial_loops;
        tally.check(ag * vars::a() == del * vars::a() + b * con, tag + " trivial loop case");
      } else {
        ++nontrivial_loops;
      }
      tally.check(ag1 == substitute(del + b * con, a_to_one()), tag + " a = 1");
    }
  }
  Outcome o = tally.outcome("edge checks");
  o.detail += "; non-loop/twisted " + std::to_string(plain) + ", trivial orientable loops " +
              std::to_string(trivial_loops) + ", other orientable loops " + std::to_string(nontrivial_loops);
  o.ok = o.ok && trivial_loops > 0 && nontrivial_loops > 0;
  return o;
}

Outcome pardu() {
  std::mt19937_64 rng(107);
  Tally tally;
  for (int i = 0; i < 120; ++i) {
    const auto g = random_graph(rng, graph_options(7));
    const LaurentPoly ag1 = substitute(arrow_dichromatic(g), a_to_one());
    for (int k = 0; k < 3; ++k) {
      const EdgeSubset d = random_subset(rng, g.num_edges());
      Substitution sigma = a_to_one();
      LaurentPoly prefactor(1);
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!d[e]) continue;
        const VarSymbol b = VarSymbol::edge(Family::b, g.edges()[e].id);
        sigma[b] = LaurentPoly(Monomial::var(b, -kWhole));
        prefactor *= vars::b(g.edges()[e].id);
      }
      tally.check(ag1 == prefactor * substitute(arrow_dichromatic(partial_dual(g, d)), sigma),
                  "graph " + std::to_string(i));
    }
  }
  return tally.outcome("(G, D) pairs");
}

Outcome thistlethwaite() {
  Tally tally;
  for (const auto& named : link_corpus()) {
    const auto l = parse_gauss(named.code);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l.num_crossings()); ++mask) {
      tally.check(thistlethwaite_verify(l, state_from_mask(l, mask)).equal,
                  named.name + " state " + std::to_string(mask));
    }
  }
  return tally.outcome("states");
}

Outcome state_duality() {
  Tally tally;
  for (const auto& named : link_corpus()) {
    const auto l = parse_gauss(named.code);
    if (l.num_crossings() > 4) continue;
    const std::uint64_t total = std::uint64_t{1} << l.num_crossings();
    for (std::uint64_t a = 0; a < total; ++a) {
      for (std::uint64_t b = 0; b < total; ++b) {
        tally.check(verify_state_duality(l, state_from_mask(l, a), state_from_mask(l, b)), named.name);
      }
    }
  }
  return tally.outcome("state pairs");
}

Outcome invariance() {
  std::mt19937_64 rng(109);
  Tally tally;
  std::size_t sequences = 0, r3 = 0;
  for (const auto& named : link_corpus()) {
    const auto start = parse_gauss(named.code);
    if (named.classical) {
      bool k_free = true;
      const LaurentPoly bracket = arrow_bracket(start);
      for (const auto& [m, c] : bracket.terms()) {
        for (const auto& [v, q] : m.factors()) k_free = k_free && v.family != Family::K;
      }
      tally.check(k_free, named.name + " arrow bracket has K terms");
    }
    if (start.num_crossings() > 4) continue;
    const auto na = normalized_arrow(start);
    const auto jo = jones(start);
    for (int seq = 0; seq < 8; ++seq) {
      auto l = start;
      ++sequences;
      bool same = true;
      for (int step = 0; step < 6; ++step) {
        if (random_move(rng, l, 6)) ++r3;
        same = same && normalized_arrow(l) == na && jones(l) == jo;
      }
      tally.check(same, named.name + " -> " + l.to_string());
    }
  }
  Outcome o = tally.outcome("checks");
  o.detail += "; " + std::to_string(sequences) + " sequences, " + std::to_string(r3) + " R3 moves";
  o.ok = o.ok && sequences >= 50 && r3 > 0;
  return o;
}

Outcome specializations() {
  Tally tally;
  for (const auto& named : link_corpus()) {
    const auto l = parse_gauss(named.code);
    tally.check(specialization_all_A(l).equal, named.name + " all-A");
    tally.check(specialization_seifert(l).equal, named.name + " Seifert");
  }
  std::mt19937_64 rng(113);
  for (int i = 0; i < 60; ++i) {
    const auto g = random_graph(rng, graph_options(5));
    tally.check(verify_br_z_relation(g, {}), "BR = Z on graph " + std::to_string(i));
  }
  return tally.outcome("identities");
}

Outcome structural() {
  std::mt19937_64 rng(127);
  Tally tally;
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(rng, graph_options(7));
    bool ok = true;
    for (unsigned long long mask = 0; mask < (1ULL << g.num_edges()); ++mask) {
      const StateStats st = state_stats(g, subset_from_mask(g.num_edges(), mask));
      ok = ok && st.genus_like >= 0 && (!st.orientable || st.genus_like % 2 == 0);
    }
    tally.check(ok, "genus_like on graph " + std::to_string(i));
  }
  for (int len = 0; len <= 10; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      ArrowList w;
      for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? Arrow::Against : Arrow::With);
      const auto results = all_cancellation_results(w);
      tally.check(results.size() == 1 && *results.begin() == reduced_arrow_count(w),
                  "word length " + std::to_string(len) + " mask " + std::to_string(mask));
    }
  }
  return tally.outcome("graphs and words");
}

}  // namespace

int main() {
  run(1, "worked example arrow dichromatic polynomial", 1, worked_example);
  run(2, "Tutte of C3 and Jones of the trefoil", 1, intro_values);
  run(3, "partial duality properties (a)-(e), 200 graphs with <= 8 edges", 60, duality_suite);
  run(4, "contraction-deletion, 200 graphs with <= 7 edges", 60, contraction_deletion);
  run(5, "partial duality identity at a = 1", 60, pardu);
  run(6, "arrow Thistlethwaite identity for every corpus state", 60, thistlethwaite);
  run(7, "state graphs are partial duals (corpus, <= 4 crossings)", 60, state_duality);
  run(8, "invariance under Reidemeister rewrites, K-free classical brackets", 60, invariance);
  run(9, "all-A and Seifert specializations, BR = Z relation", 60, specializations);
  run(10, "genus_like bounds and arrow word reduction", 60, structural);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
