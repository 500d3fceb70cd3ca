#include "arrowribbon/verify.hpp"

#include <algorithm>
#include <random>

#include "arrowribbon/duality.hpp"
#include "states.hpp"

namespace arrowribbon {

namespace {

std::string form(const ArrowRibbonGraph& g) {
  CanonicalOptions opt;
  opt.keep_edge_ids = true;
  opt.max_edges = 0;
  return canonical_form(g, opt);
}

std::vector<EdgeSubset> subsets(std::size_t n, const VerifyOptions& options, std::mt19937_64& rng) {
  std::vector<EdgeSubset> out;
  if (n <= options.exhaustive_edges) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      EdgeSubset d(n);
      for (std::size_t e = 0; e < n; ++e) d[e] = ((mask >> e) & 1U) != 0;
      out.push_back(std::move(d));
    }
    return out;
  }
  for (std::size_t i = 0; i < options.samples; ++i) {
    EdgeSubset d(n);
    for (std::size_t e = 0; e < n; ++e) d[e] = (rng() & 1U) != 0;
    out.push_back(std::move(d));
  }
  return out;
}

EdgeSubset xor_of(const EdgeSubset& a, const EdgeSubset& b) {
  EdgeSubset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] != b[i];
  return out;
}

// Subset of a graph with edge `removed` gone, as its edges are ordered there.
EdgeSubset without(const ArrowRibbonGraph& g, const ArrowRibbonGraph& smaller, const EdgeSubset& d) {
  EdgeSubset out = smaller.empty_subset();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (d[e]) out[smaller.edge_index(g.edges()[e].id)] = true;
  }
  return out;
}

class Recorder {
 public:
  void check(const std::string& name, bool ok) {
    CheckResult& c = entry(name);
    c.total += 1;
    c.passed += ok ? 1 : 0;
  }
  // Registers a check that may end up with no instances.
  void declare(const std::string& name) { entry(name); }
  PropertyReport take() { return std::move(report_); }

 private:
  CheckResult& entry(const std::string& name) {
    auto it = std::find_if(report_.checks.begin(), report_.checks.end(), [&](const CheckResult& c) { return c.name == name; });
    if (it != report_.checks.end()) return *it;
    report_.checks.push_back({name, 0, 0});
    return report_.checks.back();
  }
  PropertyReport report_;
};

Substitution a_to_one() { return {{VarSymbol::plain(Family::a), LaurentPoly(1)}}; }

}  // namespace

bool PropertyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

PropertyReport verify_duality_properties(const ArrowRibbonGraph& g, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  Recorder rec;
  const std::string base = form(g);
  const auto all = subsets(g.num_edges(), options, rng);
  const Connectivity conn = connectivity(g, g.full_subset());

  rec.check("(a) empty partial dual", form(partial_dual(g, g.empty_subset())) == base);
  rec.check("(b) full partial dual is the dual", form(partial_dual(g, g.full_subset())) == form(natural_dual(g)));
  rec.check("(c) double dual", form(natural_dual(natural_dual(g))) == base);

  for (std::size_t i = 0; i < all.size(); ++i) {
    const EdgeSubset& d = all[i];
    const ArrowRibbonGraph gd = partial_dual(g, d);
    rec.check("(c) (G^D)^D = G", form(partial_dual(gd, d)) == base);
    const EdgeSubset& d2 = all[(i * 7 + 3) % all.size()];
    rec.check("(c) (G^D)^D' = G^(D xor D')", form(partial_dual(gd, d2)) == form(partial_dual(g, xor_of(d, d2))));
    const Connectivity cd = connectivity(gd, gd.full_subset());
    rec.check("(d) orientability preserved", cd.orientable == conn.orientable);
    rec.check("(e) components preserved", cd.components == conn.components);
    rec.check("|V(G^D)| = bc(D)", static_cast<int>(gd.num_vertices()) == state_stats(g, d).bc);
    rec.check("edges and signs preserved", [&] {
      if (gd.num_edges() != g.num_edges()) return false;
      for (const auto& e : g.edges()) {
        if (gd.edges()[gd.edge_index(e.id)].sign != e.sign) return false;
      }
      return true;
    }());

    rec.declare("(G/e)^D = G^D/e = G^(D+e) - e");
    rec.declare("(G-e)^D = G^D - e = G^(D+e)/e");
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (d[e]) continue;
      const std::string& id = g.edges()[e].id;
      EdgeSubset de = d;
      de[e] = true;
      const ArrowRibbonGraph gde = partial_dual(g, de);
      const ArrowRibbonGraph con = contract(g, id);
      const ArrowRibbonGraph del = delete_edge(g, id);
      const std::string x1 = form(partial_dual(con, without(g, con, d)));
      const std::string x2 = form(contract(gd, id));
      const std::string x3 = form(delete_edge(gde, id));
      rec.check("(G/e)^D = G^D/e = G^(D+e) - e", x1 == x2 && x2 == x3);
      const std::string y1 = form(partial_dual(del, without(g, del, d)));
      const std::string y2 = form(delete_edge(gd, id));
      const std::string y3 = form(contract(gde, id));
      rec.check("(G-e)^D = G^D - e = G^(D+e)/e", y1 == y2 && y2 == y3);
    }
  }
  return rec.take();
}

PropertyReport verify_polynomial_properties(const ArrowRibbonGraph& g, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  Recorder rec;
  const auto& sso = options.state_sums;
  const LaurentPoly ag = arrow_dichromatic(g, sso);
  const LaurentPoly ag1 = substitute(ag, a_to_one());

  rec.declare("contraction-deletion (non-loop or twisted loop)");
  rec.declare("contraction-deletion (trivial orientable loop)");
  rec.declare("contraction-deletion at a = 1");
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const std::string& id = g.edges()[e].id;
    const LaurentPoly del = arrow_dichromatic(delete_edge(g, id), sso);
    const LaurentPoly con = arrow_dichromatic(contract(g, id), sso);
    const LaurentPoly b = vars::b(id);
    if (!is_orientable_loop(g, e)) {
      rec.check("contraction-deletion (non-loop or twisted loop)", ag == del + b * con);
    } else if (is_trivial_orientable_loop(g, e)) {
      rec.check("contraction-deletion (trivial orientable loop)", ag * vars::a() == del * vars::a() + b * con);
    }
    rec.check("contraction-deletion at a = 1", ag1 == substitute(del + b * con, a_to_one()));
  }

  for (const auto& d : subsets(g.num_edges(), options, rng)) {
    Substitution sigma = a_to_one();
    LaurentPoly prefactor(1);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!d[e]) continue;
      const VarSymbol b = VarSymbol::edge(Family::b, g.edges()[e].id);
      sigma[b] = LaurentPoly(Monomial::var(b, -kWhole));
      prefactor *= vars::b(g.edges()[e].id);
    }
    rec.check("partial duality at a = 1", ag1 == prefactor * substitute(arrow_dichromatic(partial_dual(g, d), sso), sigma));
  }

  rec.check("BR = Z relation", verify_br_z_relation(g, {}));

  const detail::StateEnumerator states(g);
  detail::StateInfo info;
  bool genus_ok = true;
  const std::uint64_t total = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    states.evaluate(mask, info);
    const int gl = info.genus_like();
    genus_ok = genus_ok && gl >= 0 && (!info.orientable || gl % 2 == 0);
  }
  rec.check("genus_like >= 0, even when orientable", genus_ok);
  return rec.take();
}

PropertyReport verify_properties(const ArrowRibbonGraph& g, const VerifyOptions& options) {
  PropertyReport out = verify_duality_properties(g, options);
  PropertyReport more = verify_polynomial_properties(g, options);
  out.checks.insert(out.checks.end(), more.checks.begin(), more.checks.end());
  return out;
}

}  // namespace arrowribbon
