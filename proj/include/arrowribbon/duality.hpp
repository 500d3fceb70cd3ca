#pragma once

// Deletion, partial duality, contraction and canonical forms.

#include <cstddef>
#include <string>
#include <string_view>

#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

/// G - e. Arrows on the attaching segments of `e` move onto the neighbouring
/// free vertex arcs; arrows on its free sides are dropped.
ArrowRibbonGraph delete_edge(const ArrowRibbonGraph& g, std::string_view edge);

/// G^D. Vertices of the result are the boundary cycles of (V, D); edges keep
/// their ids and signs. Throws Error(InvalidArgument) if `d` has the wrong size.
ArrowRibbonGraph partial_dual(const ArrowRibbonGraph& g, const EdgeSubset& d);
ArrowRibbonGraph partial_dual(const ArrowRibbonGraph& g, const std::vector<std::string>& edge_ids);

/// G/e = G^{e} - e.
ArrowRibbonGraph contract(const ArrowRibbonGraph& g, std::string_view edge);

ArrowRibbonGraph natural_dual(const ArrowRibbonGraph& g);

/// Untwisted loop.
bool is_orientable_loop(const ArrowRibbonGraph& g, std::size_t edge);
/// Untwisted loop whose two ends sit next to each other in the rotation.
bool is_trivial_orientable_loop(const ArrowRibbonGraph& g, std::size_t edge);

struct CanonicalOptions {
  /// Identify a graph with the one obtained by reversing vertex orientations.
  bool include_reflection = true;
  /// Graphs with more edges are rejected with Error(SizeLimit); 0 disables.
  std::size_t max_edges = 8;
  /// Keep edge ids in the form (equality up to vertex relabelling only).
  bool keep_edge_ids = false;
};

/// Serialization that is equal for two graphs exactly when they differ by a
/// relabelling of vertices and edges, a change of rotation base points or a
/// swap of edge ends (and, with include_reflection, vertex orientations).
std::string canonical_form(const ArrowRibbonGraph& g, const CanonicalOptions& options = {});

}  // namespace arrowribbon
