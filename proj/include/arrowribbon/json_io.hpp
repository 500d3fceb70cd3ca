#pragma once

// JSON encodings of graphs and polynomials.
//
// Graph: {"vertices":[{"id":..,"rotation":[{"end":"e1.0","seg_arrows":["W"],
//         "free_arrows":[]}],"lone_arrows":[]}],
//         "edges":[{"id":"e1","twist":false,"sideL":[],"sideR":[],"sign":"+"}]}
// Polynomial: {"text":..,"terms":[{"coeff":"-1","factors":[{"var":"t","exp":"4"}]}]}

#include <string>
#include <string_view>

#include "arrowribbon/polyring.hpp"
#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

/// Throws Error(Parse) for malformed JSON and Error(InvalidGraph) for an
/// inconsistent graph.
ArrowRibbonGraph graph_from_json(std::string_view text);
std::string graph_to_json(const ArrowRibbonGraph& g, int indent = 2);

std::string poly_to_json(const LaurentPoly& p, int indent = -1);

}  // namespace arrowribbon
