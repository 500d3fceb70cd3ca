#pragma once

// State-sum polynomials of arrow ribbon graphs. Every function sums over all
// 2^|E| spanning subgraphs directly.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "arrowribbon/polyring.hpp"
#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

struct StateSumOptions {
  /// Worker threads for the subset enumeration; 0 picks the hardware count.
  /// The result does not depend on it.
  unsigned threads = 1;
  /// Refuse graphs with more edges (Error(SizeLimit)).
  std::size_t max_edges = 24;
};

/// A_G(a, b, c, K).
LaurentPoly arrow_dichromatic(const ArrowRibbonGraph& g, const StateSumOptions& options = {});

/// Z_G(a, b, c): A_G with every K set to 1.
LaurentPoly dichromatic(const ArrowRibbonGraph& g, const StateSumOptions& options = {});

/// Classical Tutte polynomial of the underlying abstract graph, in the named
/// variables x and y.
LaurentPoly tutte(const ArrowRibbonGraph& g, const StateSumOptions& options = {});

/// Edge id -> (x_e, y_e). Edges without an entry use the variables x[e], y[e].
using WeightMap = std::map<std::string, std::pair<LaurentPoly, LaurentPoly>>;

WeightMap unit_weights(const ArrowRibbonGraph& g);

/// ABR_G(X, Y, Z, K) with the given doubly weighted edges.
LaurentPoly arrow_bollobas_riordan(const ArrowRibbonGraph& g, const WeightMap& weights,
                                   const StateSumOptions& options = {});

/// BR_G(X, Y, Z): the K-free doubly weighted polynomial.
LaurentPoly bollobas_riordan(const ArrowRibbonGraph& g, const WeightMap& weights, const StateSumOptions& options = {});

/// sBR_G(X, Y, Z, K). Throws Error(MissingSigns) for an unsigned graph.
LaurentPoly signed_bollobas_riordan(const ArrowRibbonGraph& g, const StateSumOptions& options = {});

struct BrZReport {
  LaurentPoly lhs;  // BR_G summed directly
  LaurentPoly rhs;  // prefactor times the substituted Z_G
  bool equal = false;
};

/// Checks BR_G(X,Y,Z) = (prod y_e) (YZ)^-v X^-k(G) Z_G(XYZ^2, {x_e Y Z / y_e}, 1/Z).
/// `lhs_weights` feed the direct sum and `rhs_weights` the substitution; they
/// coincide in the single-map overload. Each y_e on the right must be a unit
/// monomial.
BrZReport br_z_relation(const ArrowRibbonGraph& g, const WeightMap& lhs_weights, const WeightMap& rhs_weights);
bool verify_br_z_relation(const ArrowRibbonGraph& g, const WeightMap& weights);

/// The signed dichromatic polynomial: Z_G with a = q, b_e = alpha_e (positive)
/// or q/alpha_e (negative), times prod q^(-1/2) alpha_e. The variable c is
/// kept unless `c_value` is given. Throws Error(MissingSigns).
LaurentPoly signed_dichromatic_substitution(const ArrowRibbonGraph& g, const std::optional<LaurentPoly>& c_value = {},
                                            const StateSumOptions& options = {});

}  // namespace arrowribbon
