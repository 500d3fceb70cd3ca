#include "arrowribbon/graphpoly.hpp"

#include "states.hpp"

namespace arrowribbon {

using detail::StateInfo;

namespace {

VarSymbol plain(Family f) { return VarSymbol::plain(f); }

void require_signed(const ArrowRibbonGraph& g) {
  for (const auto& e : g.edges()) {
    if (!e.sign) throw Error(Errc::MissingSigns, "edge '" + e.id + "' has no sign");
  }
}

std::pair<LaurentPoly, LaurentPoly> weight_of(const WeightMap& weights, const std::string& edge) {
  if (auto it = weights.find(edge); it != weights.end()) return it->second;
  return {vars::xe(edge), vars::ye(edge)};
}

LaurentPoly unit_inverse(const LaurentPoly& p, const std::string& what) {
  if (!p.is_unit_monomial()) throw Error(Errc::NonInvertibleSubstitution, what + " is not a unit monomial");
  const auto& [m, coeff] = *p.terms().begin();
  return LaurentPoly(m.inverse(), coeff);
}

int component_count(const ArrowRibbonGraph& g) { return connectivity(g, g.full_subset()).components; }

// Shared state sum for the doubly weighted polynomials; `s_quarters` gives
// the X/Y shift of each state.
LaurentPoly br_sum(const ArrowRibbonGraph& g, const WeightMap& weights, bool with_k, bool signed_shift,
                   const StateSumOptions& options) {
  const int rank_g = static_cast<int>(g.num_vertices()) - component_count(g);
  std::vector<std::pair<LaurentPoly, LaurentPoly>> w;
  for (const auto& e : g.edges()) w.push_back(weight_of(weights, e.id));
  return detail::sum_over_states(g, options, [&](const StateInfo& s, LaurentPoly& acc) {
    const Quarters shift = signed_shift ? 2 * (s.minus_in - s.minus_out) : 0;
    std::vector<Monomial::Factor> fs{{plain(Family::X), kWhole * (rank_g - s.r) + shift},
                                     {plain(Family::Y), kWhole * s.n - shift},
                                     {plain(Family::Z), kWhole * s.genus_like()}};
    Monomial m(std::move(fs));
    if (with_k) m = m * detail::k_monomial(s.reduced);
    LaurentPoly term(m);
    for (std::size_t e = 0; e < w.size(); ++e) term *= s.f[e] ? w[e].first : w[e].second;
    acc += term;
  });
}

}  // namespace

LaurentPoly arrow_dichromatic(const ArrowRibbonGraph& g, const StateSumOptions& options) {
  return detail::sum_over_states(g, options, [&](const StateInfo& s, LaurentPoly& acc) {
    std::vector<Monomial::Factor> fs{{plain(Family::a), kWhole * s.k}, {plain(Family::c), kWhole * s.bc}};
    for (std::size_t e = 0; e < s.f.size(); ++e) {
      if (s.f[e]) fs.emplace_back(VarSymbol::edge(Family::b, g.edges()[e].id), kWhole);
    }
    acc.add_term(Monomial(std::move(fs)) * detail::k_monomial(s.reduced), 1);
  });
}

LaurentPoly dichromatic(const ArrowRibbonGraph& g, const StateSumOptions& options) {
  return drop_k_variables(arrow_dichromatic(g, options));
}

LaurentPoly tutte(const ArrowRibbonGraph& g, const StateSumOptions& options) {
  const int k_g = component_count(g);
  const VarSymbol x = VarSymbol::named("x");
  const VarSymbol y = VarSymbol::named("y");
  // Sum of (x-1)^(k(F)-k(G)) (y-1)^n(F), collected in x and y first.
  const LaurentPoly shifted = detail::sum_over_states(g, options, [&](const StateInfo& s, LaurentPoly& acc) {
    acc.add_term(Monomial({{x, kWhole * (s.k - k_g)}, {y, kWhole * s.n}}), 1);
  });
  return substitute(shifted, {{x, vars::named("x") - LaurentPoly(1)}, {y, vars::named("y") - LaurentPoly(1)}});
}

WeightMap unit_weights(const ArrowRibbonGraph& g) {
  WeightMap out;
  for (const auto& e : g.edges()) out[e.id] = {LaurentPoly(1), LaurentPoly(1)};
  return out;
}

LaurentPoly arrow_bollobas_riordan(const ArrowRibbonGraph& g, const WeightMap& weights, const StateSumOptions& options) {
  return br_sum(g, weights, true, false, options);
}

LaurentPoly bollobas_riordan(const ArrowRibbonGraph& g, const WeightMap& weights, const StateSumOptions& options) {
  return br_sum(g, weights, false, false, options);
}

LaurentPoly signed_bollobas_riordan(const ArrowRibbonGraph& g, const StateSumOptions& options) {
  require_signed(g);
  return br_sum(g, unit_weights(g), true, true, options);
}

BrZReport br_z_relation(const ArrowRibbonGraph& g, const WeightMap& lhs_weights, const WeightMap& rhs_weights) {
  BrZReport report;
  report.lhs = bollobas_riordan(g, lhs_weights);

  using namespace vars;
  const LaurentPoly yz = Y() * Z();
  Substitution sigma{{plain(Family::a), X() * Y() * Z().pow(2)}, {plain(Family::c), Z(-kWhole)}};
  LaurentPoly prefactor = LaurentPoly(Monomial({{plain(Family::Y), -kWhole * static_cast<Quarters>(g.num_vertices())},
                                                {plain(Family::Z), -kWhole * static_cast<Quarters>(g.num_vertices())},
                                                {plain(Family::X), -kWhole * component_count(g)}}));
  for (const auto& e : g.edges()) {
    auto [xw, yw] = weight_of(rhs_weights, e.id);
    sigma[VarSymbol::edge(Family::b, e.id)] = xw * yz * unit_inverse(yw, "weight y[" + e.id + "]");
    prefactor *= yw;
  }
  report.rhs = prefactor * substitute(dichromatic(g), sigma);
  report.equal = report.lhs == report.rhs;
  return report;
}

bool verify_br_z_relation(const ArrowRibbonGraph& g, const WeightMap& weights) {
  return br_z_relation(g, weights, weights).equal;
}

LaurentPoly signed_dichromatic_substitution(const ArrowRibbonGraph& g, const std::optional<LaurentPoly>& c_value,
                                            const StateSumOptions& options) {
  require_signed(g);
  using namespace vars;
  Substitution sigma{{plain(Family::a), q()}};
  if (c_value) sigma[plain(Family::c)] = *c_value;
  LaurentPoly prefactor(1);
  for (const auto& e : g.edges()) {
    const LaurentPoly al = alpha(e.id);
    sigma[VarSymbol::edge(Family::b, e.id)] = *e.sign == Sign::Plus ? al : q() * unit_inverse(al, "alpha");
    prefactor *= q(-2) * al;
  }
  return prefactor * substitute(dichromatic(g, options), sigma);
}

}  // namespace arrowribbon
