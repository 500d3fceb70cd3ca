#include "arrowribbon/ribbon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "arrowribbon/surface.hpp"

namespace arrowribbon {

ArrowList reversed(const ArrowList& arrows) {
  ArrowList out(arrows.rbegin(), arrows.rend());
  for (auto& a : out) a = flip(a);
  return out;
}

char arrow_letter(Arrow a) { return a == Arrow::With ? 'W' : 'A'; }

EndRef EndRef::parse(std::string_view text) {
  auto dot = text.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 2 != text.size() || (text.back() != '0' && text.back() != '1')) {
    throw Error(Errc::InvalidGraph, "malformed end reference '" + std::string(text) + "' (expected <edge>.0 or <edge>.1)");
  }
  return EndRef{std::string(text.substr(0, dot)), text.back() - '0'};
}

// ------------------------------------------------------------ validation

ArrowRibbonGraph ArrowRibbonGraph::from_rotation_system(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  ArrowRibbonGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.vertex_index_.emplace(g.vertices_[i].id, i).second) {
      throw Error(Errc::InvalidGraph, "duplicate vertex id '" + g.vertices_[i].id + "'");
    }
  }
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (g.edges_[i].id.empty()) throw Error(Errc::InvalidGraph, "empty edge id");
    if (!g.edge_index_.emplace(g.edges_[i].id, i).second) {
      throw Error(Errc::InvalidGraph, "duplicate edge id '" + g.edges_[i].id + "'");
    }
  }
  std::vector<std::array<bool, 2>> seen(g.edges_.size(), {false, false});
  for (const auto& v : g.vertices_) {
    if (!v.rotation.empty() && !v.lone_arrows.empty()) {
      throw Error(Errc::InvalidGraph, "vertex '" + v.id + "' has edge ends and lone arrows");
    }
    for (std::size_t pos = 0; pos < v.rotation.size(); ++pos) {
      const EndRef& end = v.rotation[pos].end;
      auto it = g.edge_index_.find(end.edge);
      if (it == g.edge_index_.end()) {
        throw Error(Errc::InvalidGraph, "vertex '" + v.id + "' references unknown edge end '" + end.to_string() + "'");
      }
      if (end.side != 0 && end.side != 1) throw Error(Errc::InvalidGraph, "bad end side in '" + end.to_string() + "'");
      auto& flag = seen[it->second][end.side];
      if (flag) throw Error(Errc::InvalidGraph, "edge end '" + end.to_string() + "' used twice");
      flag = true;
      Edge& e = g.edges_[it->second];
      (end.side == 0 ? e.end0 : e.end1) = EdgeEnd{v.id, pos};
    }
  }
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (!seen[i][0] || !seen[i][1]) throw Error(Errc::InvalidGraph, "edge '" + g.edges_[i].id + "' is missing an end");
  }
  return g;
}

std::optional<std::size_t> ArrowRibbonGraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ArrowRibbonGraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ArrowRibbonGraph::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw Error(Errc::UnknownEdge, "unknown edge '" + std::string(id) + "'");
}

const Vertex& ArrowRibbonGraph::vertex(std::string_view id) const {
  if (auto i = find_vertex(id)) return vertices_[*i];
  throw Error(Errc::InvalidArgument, "unknown vertex '" + std::string(id) + "'");
}

std::size_t ArrowRibbonGraph::vertex_index_of_end(std::size_t edge, int side) const {
  const Edge& e = edges_[edge];
  return vertex_index_.find(side == 0 ? e.end0.vertex : e.end1.vertex)->second;
}

bool ArrowRibbonGraph::is_signed() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign.has_value(); });
}

std::size_t ArrowRibbonGraph::arrow_count() const {
  std::size_t total = 0;
  for (const auto& v : vertices_) {
    total += v.lone_arrows.size();
    for (const auto& r : v.rotation) total += r.seg_arrows.size() + r.free_arrows.size();
  }
  for (const auto& e : edges_) total += e.side_l.size() + e.side_r.size();
  return total;
}

EdgeSubset ArrowRibbonGraph::subset(const std::vector<std::string>& edge_ids) const {
  EdgeSubset out = empty_subset();
  for (const auto& id : edge_ids) out[edge_index(id)] = true;
  return out;
}

// ---------------------------------------------------- arrow presentations

ArrowRibbonGraph from_arrow_presentation(const std::vector<std::vector<PresentationArrow>>& circles) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::pair<int, Arrow>> first_seen;  // label -> (edge index, direction)
  std::map<std::string, int> multiplicity;
  for (const auto& circle : circles) {
    for (const auto& arrow : circle) ++multiplicity[arrow.label];
  }
  for (const auto& [label, count] : multiplicity) {
    if (count != 2) {
      throw Error(Errc::InvalidGraph, "label '" + label + "' occurs " + std::to_string(count) + " times (expected 2)");
    }
  }
  for (std::size_t ci = 0; ci < circles.size(); ++ci) {
    Vertex v;
    v.id = "v" + std::to_string(ci + 1);
    for (const auto& arrow : circles[ci]) {
      int side = 0;
      if (auto it = first_seen.find(arrow.label); it == first_seen.end()) {
        first_seen.emplace(arrow.label, std::make_pair(static_cast<int>(edges.size()), arrow.direction));
        Edge e;
        e.id = arrow.label;
        edges.push_back(std::move(e));
      } else {
        side = 1;
        edges[it->second.first].twist = it->second.second != arrow.direction;
      }
      v.rotation.push_back(RotationEntry{EndRef{arrow.label, side}, {arrow.direction}, {}});
    }
    vertices.push_back(std::move(v));
  }
  return ArrowRibbonGraph::from_rotation_system(std::move(vertices), std::move(edges));
}

// ------------------------------------------------------- arrow reduction

int reduced_arrow_count(std::span<const Arrow> word) {
  std::vector<Arrow> stack;
  stack.reserve(word.size());
  for (Arrow a : word) {
    if (!stack.empty() && stack.back() == a) {
      stack.pop_back();
    } else {
      stack.push_back(a);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return static_cast<int>(hi - lo);
}

// ------------------------------------------------------ boundary tracing

std::string ArcTraversal::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::FreeVertexArc: out = "fv(" + owner + "," + std::to_string(index) + ")"; break;
    case Kind::Segment: out = "seg(" + owner + "." + std::to_string(index) + ")"; break;
    case Kind::EdgeSide: out = std::string(index == 0 ? "L(" : "R(") + owner + ")"; break;
    case Kind::LoneVertex: return "lone(" + owner + ")";
  }
  return out + (forward ? "+" : "-");
}

Connectivity connectivity(const ArrowRibbonGraph& g, const EdgeSubset& f) {
  const std::size_t nv = g.num_vertices();
  std::vector<std::size_t> parent(nv);
  std::vector<int> parity(nv, 0);  // orientation relative to parent
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::make_pair(x, p);
  };
  Connectivity out{static_cast<int>(nv), true};
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!f[e]) continue;
    auto [ru, pu] = find(g.vertex_index_of_end(e, 0));
    auto [rv, pv] = find(g.vertex_index_of_end(e, 1));
    const int twist = g.edges()[e].twist ? 1 : 0;
    if (ru == rv) {
      if ((pu ^ pv ^ twist) != 0) out.orientable = false;
    } else {
      parent[rv] = ru;
      parity[rv] = pu ^ pv ^ twist;
      --out.components;
    }
  }
  return out;
}

BoundaryReport boundary_walks(const ArrowRibbonGraph& g, const EdgeSubset& f) {
  if (f.size() != g.num_edges()) throw Error(Errc::InvalidArgument, "edge subset size mismatch");
  const Surface surface = Surface::from_graph(g);
  BoundaryReport report;
  for (const auto& cycle : surface.cycles(f)) {
    BoundaryComponent comp;
    comp.word = surface.word(cycle);
    comp.reduced_count = reduced_arrow_count(comp.word);
    for (const auto& step : cycle) {
      ArcTraversal t;
      if (step.vertex_arc) {
        const auto& va = surface.vertex_arcs()[step.index];
        t = {ArcTraversal::Kind::FreeVertexArc, va.origin, va.origin_pos, step.forward};
      } else {
        const Edge& e = g.edges()[step.index];
        switch (step.side) {
          case 0: t = {ArcTraversal::Kind::Segment, e.id, 0, step.forward}; break;
          case 1: t = {ArcTraversal::Kind::EdgeSide, e.id, 1, step.forward}; break;
          case 2: t = {ArcTraversal::Kind::Segment, e.id, 1, e.twist ? !step.forward : step.forward}; break;
          default: t = {ArcTraversal::Kind::EdgeSide, e.id, 0, !step.forward}; break;
        }
      }
      comp.walk.push_back(std::move(t));
    }
    report.components.push_back(std::move(comp));
  }
  for (const auto& lone : surface.lone_vertices()) {
    BoundaryComponent comp;
    comp.walk.push_back({ArcTraversal::Kind::LoneVertex, lone.id, 0, true});
    comp.word = lone.arrows;
    comp.reduced_count = reduced_arrow_count(comp.word);
    report.components.push_back(std::move(comp));
  }
  const Connectivity conn = connectivity(g, f);
  const int size_f = static_cast<int>(std::count(f.begin(), f.end(), true));
  report.k = conn.components;
  report.orientable = conn.orientable;
  report.bc = static_cast<int>(report.components.size());
  report.r = static_cast<int>(g.num_vertices()) - report.k;
  report.n = size_f - report.r;
  report.genus_like = report.k - report.bc + report.n;
  return report;
}

StateStats state_stats(const ArrowRibbonGraph& g, const EdgeSubset& f) {
  const BoundaryReport r = boundary_walks(g, f);
  return StateStats{r.k, r.bc, r.r, r.n, r.genus_like, r.orientable};
}

}  // namespace arrowribbon
