#include "arrowribbon/transfer.hpp"

#include <algorithm>

#include "arrowribbon/duality.hpp"
#include "arrowribbon/surface.hpp"
#include "states.hpp"

namespace arrowribbon {

namespace {

bool is_incoming(int half_edge) { return half_edge == kOverIn || half_edge == kUnderIn; }

Split choice_at(const SplitState& s, int crossing) {
  auto it = s.find(crossing);
  if (it == s.end()) throw Error(Errc::InvalidArgument, "state misses crossing " + std::to_string(crossing));
  return it->second;
}

VarSymbol plain(Family f) { return VarSymbol::plain(f); }

std::size_t state_graph_edge(const VirtualLinkDiagram& l, const std::string& id) {
  const auto& cs = l.crossings();
  return static_cast<std::size_t>(std::find(cs.begin(), cs.end(), std::stoi(id)) - cs.begin());
}

}  // namespace

ArrowRibbonGraph state_graph(const VirtualLinkDiagram& l, const SplitState& s) {
  const auto& crossings = l.crossings();
  std::map<int, int> index;
  // corner_of[4i + half-edge kind] = corner id of that half-edge
  std::vector<int> corner_of(4 * crossings.size());
  std::vector<Surface::Band> bands;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const int c = crossings[i];
    index[c] = static_cast<int>(i);
    const Sign sign = l.sign(c);
    const auto h = ccw_order(sign);
    Surface::Band band;
    band.id = std::to_string(c);
    const Split choice = choice_at(s, c);
    band.sign = choice == Split::A ? Sign::Plus : Sign::Minus;
    // The A-smoothing keeps sides s1, s3 (h1-h2 and h3-h0).
    band.glued_odd = choice == Split::A;
    for (int k = 0; k < 4; ++k) {
      corner_of[4 * i + h[k]] = static_cast<int>(4 * i) + k;
      // Sides joining two ends of the same kind carry the counterclockwise arrow.
      if (is_incoming(h[k]) == is_incoming(h[(k + 1) % 4])) band.sides[k] = {Arrow::With};
    }
    bands.push_back(std::move(band));
  }

  std::vector<Surface::VertexArc> arcs;
  std::vector<Surface::LoneVertex> lone;
  for (const auto& comp : l.components()) {
    if (comp.empty()) {
      lone.push_back({"u" + std::to_string(lone.size() + 1), {}, Surface::kNoRank});
      continue;
    }
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const Passage& p = comp[j];
      const Passage& q = comp[(j + 1) % comp.size()];
      Surface::VertexArc va;
      va.arc.from = corner_of[4 * index[p.crossing] + (p.over ? kOverOut : kUnderOut)];
      va.arc.to = corner_of[4 * index[q.crossing] + (q.over ? kOverIn : kUnderIn)];
      arcs.push_back(std::move(va));
    }
  }
  return Surface(std::move(bands), std::move(arcs), std::move(lone)).to_graph();
}

EdgeSubset state_difference(const VirtualLinkDiagram& l, const SplitState& s, const SplitState& s2) {
  EdgeSubset out;
  for (int c : l.crossings()) out.push_back(choice_at(s, c) != choice_at(s2, c));
  return out;
}

bool verify_state_duality(const VirtualLinkDiagram& l, const SplitState& s, const SplitState& s2) {
  // Edges of G_L^s come in crossing order, matching state_difference.
  const EdgeSubset diff = state_difference(l, s, s2);
  const ArrowRibbonGraph dual = partial_dual(state_graph(l, s), diff);
  // Changing the splitting also changes the sign of the edge.
  std::vector<Edge> edges = dual.edges();
  for (auto& e : edges) {
    if (diff[state_graph_edge(l, e.id)]) e.sign = *e.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
  }
  const ArrowRibbonGraph resigned = ArrowRibbonGraph::from_rotation_system(dual.vertices(), std::move(edges));
  return canonical_form(resigned) == canonical_form(state_graph(l, s2));
}

IdentityReport thistlethwaite_verify(const VirtualLinkDiagram& l, const SplitState& s, const StateSumOptions& options) {
  using namespace vars;
  const ArrowRibbonGraph g = state_graph(l, s);
  IdentityReport report;
  report.lhs = arrow_bracket(l);
  Substitution sigma{{plain(Family::a), LaurentPoly(1)}, {plain(Family::c), d()}};
  int plus = 0;
  int minus = 0;
  for (const auto& e : g.edges()) {
    const bool positive = *e.sign == Sign::Plus;
    (positive ? plus : minus) += 1;
    sigma[VarSymbol::edge(Family::b, e.id)] = positive ? B() * A(-kWhole) : A() * B(-kWhole);
  }
  const LaurentPoly prefactor(Monomial({{plain(Family::A), kWhole * plus},
                                        {plain(Family::B), kWhole * minus},
                                        {plain(Family::d), -kWhole}}));
  report.rhs = prefactor * substitute(arrow_dichromatic(g, options), sigma);
  report.equal = report.lhs == report.rhs;
  return report;
}

IdentityReport specialization_all_A(const VirtualLinkDiagram& l, const StateSumOptions& options) {
  const ArrowRibbonGraph g = state_graph(l, uniform_state(l, Split::A));
  const int edges = static_cast<int>(g.num_edges());
  IdentityReport report;
  report.lhs = arrow_bracket(l);
  report.rhs = detail::sum_over_states(g, options, [&](const detail::StateInfo& st, LaurentPoly& acc) {
    Monomial m({{plain(Family::A), kWhole * (edges - st.size)},
                {plain(Family::B), kWhole * st.size},
                {plain(Family::d), kWhole * (st.bc - 1)}});
    acc.add_term(m * detail::k_monomial(st.reduced), 1);
  });
  report.equal = report.lhs == report.rhs;
  return report;
}

IdentityReport specialization_seifert(const VirtualLinkDiagram& l, const StateSumOptions& options) {
  using namespace vars;
  const ArrowRibbonGraph g = state_graph(l, seifert_state(l));
  const StateStats full = state_stats(g, g.full_subset());
  IdentityReport report;
  report.lhs = arrow_bracket(l);
  const Substitution sigma{{plain(Family::X), A() * d() * B(-kWhole)},
                           {plain(Family::Y), B() * d() * A(-kWhole)},
                           {plain(Family::Z), d(-kWhole)}};
  const LaurentPoly prefactor(Monomial({{plain(Family::A), kWhole * full.n},
                                        {plain(Family::B), kWhole * full.r},
                                        {plain(Family::d), kWhole * (full.k - 1)}}));
  report.rhs = prefactor * substitute(signed_bollobas_riordan(g, options), sigma);
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace arrowribbon
