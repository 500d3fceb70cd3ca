#pragma once

// Corner model of an arrow ribbon graph.
//
// Every edge ribbon is a rectangle with corners c0..c3 (corner ids 4e..4e+3)
// and sides s_k = (c_k -> c_{k+1 mod 4}). One opposite pair of sides is glued
// to vertices, the other pair is free. Each corner also lies on exactly one
// free vertex arc. Vertex discs are the cycles that alternate free vertex arcs
// and glued sides, so partial duality on an edge only swaps its glued pair,
// and the boundary of a spanning subgraph F is the cycle set obtained by
// swapping the pairs of the edges in F.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

class Surface {
 public:
  static constexpr std::size_t kNoRank = static_cast<std::size_t>(-1);

  struct Arc {
    int from = -1;
    int to = -1;
    ArrowList arrows;  // relative to from -> to
  };

  struct Band {
    std::string id;
    std::optional<Sign> sign;
    std::array<ArrowList, 4> sides;  // arrows relative to c_k -> c_{k+1}
    bool glued_odd = false;          // glued pair is {s1, s3} instead of {s0, s2}
  };

  struct VertexArc {
    Arc arc;
    std::string origin;  // vertex id it came from
    std::size_t origin_pos = 0;
    std::size_t origin_rank = kNoRank;  // index of that vertex in its graph
  };

  struct LoneVertex {
    std::string id;
    ArrowList arrows;
    std::size_t rank = kNoRank;
  };

  struct Step {
    bool vertex_arc = true;
    int index = 0;       // vertex arc index, or band index
    int side = 0;        // band side for glued steps
    bool forward = true;
  };
  using Cycle = std::vector<Step>;

  Surface() = default;
  static Surface from_graph(const ArrowRibbonGraph& g);
  /// Builds a surface from raw parts; validates the corner incidences.
  Surface(std::vector<Band> bands, std::vector<VertexArc> vertex_arcs, std::vector<LoneVertex> lone);

  /// Rotation-system form of the current gluing. Vertex ids, start points and
  /// orientations of untouched vertices are preserved.
  ArrowRibbonGraph to_graph() const;

  const std::vector<Band>& bands() const { return bands_; }
  const std::vector<VertexArc>& vertex_arcs() const { return vertex_arcs_; }
  const std::vector<LoneVertex>& lone_vertices() const { return lone_; }

  /// Swaps glued and free sides on band `e`.
  void toggle(std::size_t e) { bands_[e].glued_odd = !bands_[e].glued_odd; }

  /// Cycles of the gluing with the bands in `toggled` swapped. Lone vertices
  /// are not included.
  std::vector<Cycle> cycles(const EdgeSubset& toggled) const;
  ArrowList word(const Cycle& cycle) const;

  int vertex_arc_at(int corner) const { return vertex_arc_of_corner_[corner]; }

 private:
  void index_corners();

  std::vector<Band> bands_;
  std::vector<VertexArc> vertex_arcs_;
  std::vector<LoneVertex> lone_;
  std::vector<int> vertex_arc_of_corner_;
};

}  // namespace arrowribbon
