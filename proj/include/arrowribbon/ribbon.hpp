#pragma once

// Arrow ribbon graphs as rotation systems.
//
// Arc parametrization convention
// ------------------------------
// * A vertex boundary is read along its rotation order. Each rotation entry is
//   the attaching segment of one edge end followed by the free vertex arc that
//   leads to the next entry. Arrows on both are recorded relative to that
//   direction.
// * Write P and Q for the first and second endpoint of a segment in rotation
//   order. An edge has two free sides, both read from its end0 toward its end1.
//   Side L starts at P of end0 and side R at Q of end0.
// * Untwisted edges join P0 to Q1 (side L) and Q0 to P1 (side R); twisted edges
//   join P0 to P1 and Q0 to Q1.
//
// Arrows are stored as With/Against the reference direction of their arc.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrowribbon/error.hpp"

namespace arrowribbon {

enum class Arrow : std::uint8_t { With, Against };
using ArrowList = std::vector<Arrow>;

inline Arrow flip(Arrow a) { return a == Arrow::With ? Arrow::Against : Arrow::With; }
/// The same arrows read in the opposite direction.
ArrowList reversed(const ArrowList& arrows);
char arrow_letter(Arrow a);

enum class Sign : std::uint8_t { Plus, Minus };

struct EndRef {
  std::string edge;
  int side = 0;  // 0 or 1

  std::string to_string() const { return edge + "." + std::to_string(side); }
  static EndRef parse(std::string_view text);
  friend bool operator==(const EndRef&, const EndRef&) = default;
};

struct RotationEntry {
  EndRef end;
  ArrowList seg_arrows;
  ArrowList free_arrows;  // on the free vertex arc after this segment
};

struct Vertex {
  std::string id;
  std::vector<RotationEntry> rotation;
  ArrowList lone_arrows;  // only for a vertex without edge ends
};

struct EdgeEnd {
  std::string vertex;
  std::size_t position = 0;
};

struct Edge {
  std::string id;
  bool twist = false;
  ArrowList side_l;
  ArrowList side_r;
  std::optional<Sign> sign;
  // Filled in by validation.
  EdgeEnd end0;
  EdgeEnd end1;
};

/// Edge subset indexed like ArrowRibbonGraph::edges().
using EdgeSubset = std::vector<bool>;

class ArrowRibbonGraph {
 public:
  ArrowRibbonGraph() = default;

  /// Validates the cross references and fills in edge ends. Throws
  /// Error(InvalidGraph) on a dangling or repeated end reference.
  static ArrowRibbonGraph from_rotation_system(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  /// Throws Error(UnknownEdge).
  std::size_t edge_index(std::string_view id) const;
  const Edge& edge(std::string_view id) const { return edges_[edge_index(id)]; }
  const Vertex& vertex(std::string_view id) const;
  std::size_t vertex_index_of_end(std::size_t edge, int side) const;

  bool is_loop(std::size_t edge) const { return edges_[edge].end0.vertex == edges_[edge].end1.vertex; }
  /// True when every edge carries a sign.
  bool is_signed() const;
  std::size_t arrow_count() const;

  EdgeSubset subset(const std::vector<std::string>& edge_ids) const;
  EdgeSubset empty_subset() const { return EdgeSubset(edges_.size(), false); }
  EdgeSubset full_subset() const { return EdgeSubset(edges_.size(), true); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
};

struct PresentationArrow {
  std::string label;
  Arrow direction = Arrow::With;  // relative to the circle's reading direction
};

/// Glues a disc to every circle and an edge ribbon to every label pair. The
/// ribbon is attached so that the two arrows run the same way around its
/// boundary, which makes it untwisted exactly when both arrows point the same
/// way relative to their circles. The arrows stay on the attaching arcs.
ArrowRibbonGraph from_arrow_presentation(const std::vector<std::vector<PresentationArrow>>& circles);

/// Number of arrows left after cancelling cyclically adjacent equal arrows;
/// the K subscript is half of it. Odd words always reduce to a single arrow.
int reduced_arrow_count(std::span<const Arrow> word);

struct ArcTraversal {
  enum class Kind : std::uint8_t { FreeVertexArc, Segment, EdgeSide, LoneVertex };
  Kind kind = Kind::FreeVertexArc;
  std::string owner;      // vertex id (FreeVertexArc, LoneVertex) or edge id
  std::size_t index = 0;  // rotation position, end side (0/1) or edge side (0 = L, 1 = R)
  bool forward = true;    // walked along the arc's reference direction

  std::string to_string() const;
};

struct BoundaryComponent {
  std::vector<ArcTraversal> walk;
  ArrowList word;  // With = arrow points along the walk
  int reduced_count = 0;  // twice the K subscript
};

struct BoundaryReport {
  std::vector<BoundaryComponent> components;
  int k = 0;
  int bc = 0;
  int r = 0;
  int n = 0;
  bool orientable = true;
  int genus_like = 0;  // k - bc + n
};

struct StateStats {
  int k = 0;
  int bc = 0;
  int r = 0;
  int n = 0;
  int genus_like = 0;
  bool orientable = true;
};

/// Traces the boundary of the spanning subgraph (V(G), F). Arrows on the
/// attaching arcs of edges outside F read as free vertex arc arrows; arrows on
/// their free sides are dropped.
BoundaryReport boundary_walks(const ArrowRibbonGraph& g, const EdgeSubset& f);
StateStats state_stats(const ArrowRibbonGraph& g, const EdgeSubset& f);

/// Components and orientability of the spanning subgraph F, from the
/// rotation system alone (no boundary tracing).
struct Connectivity {
  int components = 0;
  bool orientable = true;
};
Connectivity connectivity(const ArrowRibbonGraph& g, const EdgeSubset& f);

}  // namespace arrowribbon
