#pragma once

// The signed arrow ribbon graph G_L^s of a link diagram and a state, and the
// identities relating its polynomials to the arrow bracket.

#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/ribbon.hpp"
#include "arrowribbon/vlink.hpp"

namespace arrowribbon {

/// One vertex per state circle, one edge per crossing (id = crossing number).
/// Edges are positive at A-splittings and negative at B-splittings.
/// Throws Error(InvalidArgument) if `s` misses a crossing.
ArrowRibbonGraph state_graph(const VirtualLinkDiagram& l, const SplitState& s);

/// Crossings where the two states differ, as an edge subset of state_graph(l, s).
EdgeSubset state_difference(const VirtualLinkDiagram& l, const SplitState& s, const SplitState& s2);

/// canonical_form(partial_dual(G_L^s, diff(s, s2))) == canonical_form(G_L^s2).
bool verify_state_duality(const VirtualLinkDiagram& l, const SplitState& s, const SplitState& s2);

struct IdentityReport {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal = false;
};

/// lhs = <L>_A(A, B, d); rhs = A^e+ B^e- d^-1 A_G(1, b, d, K) with G = G_L^s and
/// b_e = B/A on positive, A/B on negative edges.
IdentityReport thistlethwaite_verify(const VirtualLinkDiagram& l, const SplitState& s,
                                     const StateSumOptions& options = {});

/// Sum over F of A^|E-F| B^|F| d^(bc(F)-1) prod K on the all-A state graph.
IdentityReport specialization_all_A(const VirtualLinkDiagram& l, const StateSumOptions& options = {});

/// A^n(G) B^r(G) d^(k(G)-1) sBR_G(Ad/B, Bd/A, 1/d, K) on the Seifert state graph.
IdentityReport specialization_seifert(const VirtualLinkDiagram& l, const StateSumOptions& options = {});

}  // namespace arrowribbon
