#include "arrowribbon/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrowribbon {

namespace {

int corner(std::size_t band, int k) { return static_cast<int>(4 * band) + (k & 3); }

ArrowList read(const ArrowList& arrows, bool forward) { return forward ? arrows : reversed(arrows); }

Surface::Cycle reverse_cycle(const Surface::Cycle& cycle) {
  // Reversed walk that still starts with a vertex arc.
  Surface::Cycle out;
  out.reserve(cycle.size());
  out.push_back(cycle.front());
  for (std::size_t i = cycle.size() - 1; i >= 1; --i) out.push_back(cycle[i]);
  for (auto& s : out) s.forward = !s.forward;
  return out;
}

}  // namespace

Surface::Surface(std::vector<Band> bands, std::vector<VertexArc> vertex_arcs, std::vector<LoneVertex> lone)
    : bands_(std::move(bands)), vertex_arcs_(std::move(vertex_arcs)), lone_(std::move(lone)) {
  index_corners();
}

void Surface::index_corners() {
  vertex_arc_of_corner_.assign(4 * bands_.size(), -1);
  for (std::size_t i = 0; i < vertex_arcs_.size(); ++i) {
    const Arc& a = vertex_arcs_[i].arc;
    for (int c : {a.from, a.to}) {
      if (c < 0 || c >= static_cast<int>(vertex_arc_of_corner_.size()) || vertex_arc_of_corner_[c] != -1 || a.from == a.to) {
        throw Error(Errc::InvalidGraph, "corner incidence broken at vertex arc " + std::to_string(i));
      }
      vertex_arc_of_corner_[c] = static_cast<int>(i);
    }
  }
  if (std::find(vertex_arc_of_corner_.begin(), vertex_arc_of_corner_.end(), -1) != vertex_arc_of_corner_.end()) {
    throw Error(Errc::InvalidGraph, "corner without a free vertex arc");
  }
}

Surface Surface::from_graph(const ArrowRibbonGraph& g) {
  std::vector<Band> bands;
  bands.reserve(g.num_edges());
  // P and Q corners of each (edge, side).
  std::vector<std::array<int, 4>> pq(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges()[e];
    Band band;
    band.id = edge.id;
    band.sign = edge.sign;
    const Vertex& v0 = g.vertex(edge.end0.vertex);
    const Vertex& v1 = g.vertex(edge.end1.vertex);
    const ArrowList& seg0 = v0.rotation[edge.end0.position].seg_arrows;
    const ArrowList& seg1 = v1.rotation[edge.end1.position].seg_arrows;
    band.sides[0] = seg0;
    band.sides[1] = edge.side_r;
    band.sides[2] = edge.twist ? reversed(seg1) : seg1;
    band.sides[3] = reversed(edge.side_l);
    pq[e] = edge.twist ? std::array<int, 4>{corner(e, 0), corner(e, 1), corner(e, 3), corner(e, 2)}
                       : std::array<int, 4>{corner(e, 0), corner(e, 1), corner(e, 2), corner(e, 3)};
    bands.push_back(std::move(band));
  }
  std::vector<VertexArc> arcs;
  std::vector<LoneVertex> lone;
  for (std::size_t vi = 0; vi < g.num_vertices(); ++vi) {
    const Vertex& v = g.vertices()[vi];
    if (v.rotation.empty()) {
      lone.push_back(LoneVertex{v.id, v.lone_arrows, vi});
      continue;
    }
    const std::size_t m = v.rotation.size();
    for (std::size_t i = 0; i < m; ++i) {
      const EndRef& here = v.rotation[i].end;
      const EndRef& next = v.rotation[(i + 1) % m].end;
      const std::size_t eh = g.edge_index(here.edge);
      const std::size_t en = g.edge_index(next.edge);
      const int q = pq[eh][2 * here.side + 1];
      const int p = pq[en][2 * next.side];
      arcs.push_back(VertexArc{Arc{q, p, v.rotation[i].free_arrows}, v.id, i, vi});
    }
  }
  return Surface(std::move(bands), std::move(arcs), std::move(lone));
}

std::vector<Surface::Cycle> Surface::cycles(const EdgeSubset& toggled) const {
  std::vector<Cycle> out;
  std::vector<bool> visited(vertex_arc_of_corner_.size(), false);
  for (int start = 0; start < static_cast<int>(visited.size()); ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    int cur = start;
    do {
      visited[cur] = true;
      const int va = vertex_arc_of_corner_[cur];
      const Arc& arc = vertex_arcs_[va].arc;
      const bool forward = arc.from == cur;
      const int next = forward ? arc.to : arc.from;
      cycle.push_back(Step{true, va, 0, forward});
      visited[next] = true;
      const std::size_t e = static_cast<std::size_t>(next / 4);
      const int k = next % 4;
      const int parity = (bands_[e].glued_odd != (e < toggled.size() && toggled[e])) ? 1 : 0;
      if (k % 2 == parity) {
        cycle.push_back(Step{false, static_cast<int>(e), k, true});
        cur = corner(e, k + 1);
      } else {
        cycle.push_back(Step{false, static_cast<int>(e), (k + 3) % 4, false});
        cur = corner(e, k + 3);
      }
    } while (cur != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

ArrowList Surface::word(const Cycle& cycle) const {
  ArrowList out;
  for (const auto& s : cycle) {
    const ArrowList& arrows = s.vertex_arc ? vertex_arcs_[s.index].arc.arrows : bands_[s.index].sides[s.side];
    if (s.forward) {
      out.insert(out.end(), arrows.begin(), arrows.end());
    } else {
      for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) out.push_back(flip(*it));
    }
  }
  return out;
}

ArrowRibbonGraph Surface::to_graph() const {
  std::vector<Cycle> cycles = this->cycles(EdgeSubset(bands_.size(), false));

  // A cycle keeps the id of its source vertex when it is made of exactly that
  // vertex's arcs and no other cycle uses them.
  std::map<std::string, std::set<std::size_t>> cycles_of_origin;
  std::vector<std::set<std::string>> origins(cycles.size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    for (const auto& s : cycles[ci]) {
      if (!s.vertex_arc) continue;
      const auto& va = vertex_arcs_[s.index];
      origins[ci].insert(va.origin);
      cycles_of_origin[va.origin].insert(ci);
    }
  }
  std::set<std::string> used_ids;
  for (const auto& l : lone_) used_ids.insert(l.id);
  std::vector<std::optional<std::string>> kept_id(cycles.size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    if (origins[ci].size() != 1) continue;
    const std::string& o = *origins[ci].begin();
    if (o.empty() || cycles_of_origin[o].size() != 1 || used_ids.count(o) != 0) continue;
    kept_id[ci] = o;
    used_ids.insert(o);
  }

  struct Slot {
    std::size_t vertex = 0;
    std::size_t position = 0;
    int entry_corner = -1;  // P
    int exit_corner = -1;   // Q
    ArrowList arrows;       // read from P to Q
  };
  std::vector<std::array<std::optional<Slot>, 4>> slots(bands_.size());

  struct Pending {
    Vertex vertex;
    std::size_t rank = kNoRank;
    std::size_t order = 0;
  };
  std::vector<Pending> pending;
  int fresh = 1;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    Cycle cycle = cycles[ci];
    std::size_t rank = kNoRank;
    if (kept_id[ci]) {
      // Restore the original start point and reading direction.
      std::size_t best = 0;
      for (std::size_t i = 0; i < cycle.size(); i += 2) {
        if (vertex_arcs_[cycle[i].index].origin_pos < vertex_arcs_[cycle[best].index].origin_pos) best = i;
      }
      std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(best), cycle.end());
      if (!cycle.front().forward) {
        cycle = reverse_cycle(cycle);
      }
      rank = vertex_arcs_[cycle.front().index].origin_rank;
    }
    Pending p;
    p.rank = rank;
    p.order = ci;
    if (kept_id[ci]) {
      p.vertex.id = *kept_id[ci];
    } else {
      std::string id;
      do {
        id = "v" + std::to_string(fresh++);
      } while (used_ids.count(id) != 0);
      used_ids.insert(id);
      p.vertex.id = id;
    }
    // Entry j is the glued side just before vertex arc 2j, then that arc.
    const std::size_t m = cycle.size() / 2;
    for (std::size_t j = 0; j < m; ++j) {
      const Step& side = cycle[(2 * j + cycle.size() - 1) % cycle.size()];
      const Step& arc = cycle[2 * j];
      const int k = side.side;
      const int from = corner(static_cast<std::size_t>(side.index), side.forward ? k : k + 1);
      const int to = corner(static_cast<std::size_t>(side.index), side.forward ? k + 1 : k);
      slots[side.index][k] = Slot{pending.size(), j, from, to, read(bands_[side.index].sides[k], side.forward)};
      RotationEntry entry;
      entry.free_arrows = read(vertex_arcs_[arc.index].arc.arrows, arc.forward);
      p.vertex.rotation.push_back(std::move(entry));
    }
    pending.push_back(std::move(p));
  }

  std::vector<Edge> edges;
  edges.reserve(bands_.size());
  for (std::size_t e = 0; e < bands_.size(); ++e) {
    const Band& band = bands_[e];
    const int g0 = band.glued_odd ? 1 : 0;
    const int g1 = g0 + 2;
    const Slot& s0 = *slots[e][g0];
    const Slot& s1 = *slots[e][g1];
    Edge edge;
    edge.id = band.id;
    edge.sign = band.sign;
    // Free sides are the other two; find the one touching P0.
    auto free_side_from = [&](int start) {
      for (int k : {g0 + 1, (g0 + 3) % 4}) {
        const int a = corner(e, k);
        const int b = corner(e, k + 1);
        if (a == start) return std::make_pair(band.sides[k], b);
        if (b == start) return std::make_pair(reversed(band.sides[k]), a);
      }
      throw Error(Errc::InvalidGraph, "band corners inconsistent");
    };
    auto [left, left_end] = free_side_from(s0.entry_corner);
    auto [right, right_end] = free_side_from(s0.exit_corner);
    (void)right_end;
    edge.side_l = std::move(left);
    edge.side_r = std::move(right);
    edge.twist = left_end == s1.entry_corner;
    auto& v0 = pending[s0.vertex].vertex.rotation[s0.position];
    v0.end = EndRef{band.id, 0};
    v0.seg_arrows = s0.arrows;
    auto& v1 = pending[s1.vertex].vertex.rotation[s1.position];
    v1.end = EndRef{band.id, 1};
    v1.seg_arrows = s1.arrows;
    edges.push_back(std::move(edge));
  }

  for (const auto& l : lone_) {
    Pending p;
    p.vertex.id = l.id;
    p.vertex.lone_arrows = l.arrows;
    p.rank = l.rank;
    p.order = cycles.size() + pending.size();
    pending.push_back(std::move(p));
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.order < b.order;
  });
  std::vector<Vertex> vertices;
  vertices.reserve(pending.size());
  for (auto& p : pending) vertices.push_back(std::move(p.vertex));
  return ArrowRibbonGraph::from_rotation_system(std::move(vertices), std::move(edges));
}

}  // namespace arrowribbon
