#include "arrowribbon/duality.hpp"

#include <algorithm>
#include <deque>

#include "arrowribbon/surface.hpp"

namespace arrowribbon {

ArrowRibbonGraph delete_edge(const ArrowRibbonGraph& g, std::string_view edge) {
  const std::size_t index = g.edge_index(edge);
  std::vector<Vertex> vertices = g.vertices();
  for (auto& v : vertices) {
    // Remove this edge's entries one at a time; the arcs on either side of a
    // removed segment fuse into the preceding free vertex arc.
    for (;;) {
      auto it = std::find_if(v.rotation.begin(), v.rotation.end(),
                             [&](const RotationEntry& r) { return r.end.edge == g.edges()[index].id; });
      if (it == v.rotation.end()) break;
      const std::size_t j = static_cast<std::size_t>(it - v.rotation.begin());
      RotationEntry removed = std::move(*it);
      v.rotation.erase(it);
      ArrowList merged = std::move(removed.seg_arrows);
      merged.insert(merged.end(), removed.free_arrows.begin(), removed.free_arrows.end());
      if (v.rotation.empty()) {
        v.lone_arrows = std::move(merged);
        break;
      }
      auto& prev = v.rotation[(j + v.rotation.size() - 1) % v.rotation.size()];
      prev.free_arrows.insert(prev.free_arrows.end(), merged.begin(), merged.end());
    }
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (e != index) edges.push_back(g.edges()[e]);
  }
  return ArrowRibbonGraph::from_rotation_system(std::move(vertices), std::move(edges));
}

ArrowRibbonGraph partial_dual(const ArrowRibbonGraph& g, const EdgeSubset& d) {
  if (d.size() != g.num_edges()) throw Error(Errc::InvalidArgument, "edge subset size mismatch");
  Surface s = Surface::from_graph(g);
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e]) s.toggle(e);
  }
  return s.to_graph();
}

ArrowRibbonGraph partial_dual(const ArrowRibbonGraph& g, const std::vector<std::string>& edge_ids) {
  return partial_dual(g, g.subset(edge_ids));
}

ArrowRibbonGraph contract(const ArrowRibbonGraph& g, std::string_view edge) {
  EdgeSubset d = g.empty_subset();
  d[g.edge_index(edge)] = true;
  return delete_edge(partial_dual(g, d), edge);
}

ArrowRibbonGraph natural_dual(const ArrowRibbonGraph& g) { return partial_dual(g, g.full_subset()); }

bool is_orientable_loop(const ArrowRibbonGraph& g, std::size_t edge) {
  return g.is_loop(edge) && !g.edges()[edge].twist;
}

bool is_trivial_orientable_loop(const ArrowRibbonGraph& g, std::size_t edge) {
  if (!is_orientable_loop(g, edge)) return false;
  const Edge& e = g.edges()[edge];
  const std::size_t m = g.vertex(e.end0.vertex).rotation.size();
  const std::size_t gap = (e.end1.position + m - e.end0.position) % m;
  return gap == 1 || gap == m - 1;
}

// ------------------------------------------------------------ canonical form

namespace {

// The surface seen as a cubic graph on band corners with three perfect
// matchings: along a free vertex arc (v), across a glued side (g) and across
// a free side (f). Each matching edge carries the arrows of its arc.
struct CornerGraph {
  struct Link {
    int to = -1;
    ArrowList word;  // read from this corner toward `to`
    bool along_rotation = false;  // v links only
  };
  std::vector<std::array<Link, 3>> links;
  std::vector<char> sign;
  std::vector<std::string> band_id;
};

CornerGraph corner_graph(const Surface& s) {
  CornerGraph cg;
  const int n = static_cast<int>(4 * s.bands().size());
  cg.links.resize(n);
  cg.sign.resize(n);
  cg.band_id.resize(n);
  for (int c = 0; c < n; ++c) {
    const auto& va = s.vertex_arcs()[s.vertex_arc_at(c)].arc;
    const bool from_here = va.from == c;
    cg.links[c][0] = {from_here ? va.to : va.from, from_here ? va.arrows : reversed(va.arrows), from_here};

    const auto& band = s.bands()[c / 4];
    const int k = c % 4;
    const int base = c - k;
    const CornerGraph::Link up{base + (k + 1) % 4, band.sides[k], false};
    const CornerGraph::Link down{base + (k + 3) % 4, reversed(band.sides[(k + 3) % 4]), false};
    const bool glued_up = (k % 2) == (band.glued_odd ? 1 : 0);
    cg.links[c][1] = glued_up ? up : down;
    cg.links[c][2] = glued_up ? down : up;
    cg.sign[c] = band.sign ? (*band.sign == Sign::Plus ? '+' : '-') : '.';
    cg.band_id[c] = band.id;
  }
  return cg;
}

std::string word_text(const ArrowList& w) {
  std::string out;
  for (Arrow a : w) out.push_back(arrow_letter(a));
  return out;
}

std::string encode_from(const CornerGraph& cg, int start, const CanonicalOptions& opt) {
  std::vector<int> label(cg.links.size(), -1);
  std::vector<int> order;
  std::deque<int> queue{start};
  label[start] = 0;
  order.push_back(start);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (const auto& link : cg.links[c]) {
      if (label[link.to] == -1) {
        label[link.to] = static_cast<int>(order.size());
        order.push_back(link.to);
        queue.push_back(link.to);
      }
    }
  }
  std::string out;
  for (int c : order) {
    out += cg.sign[c];
    if (opt.keep_edge_ids) out += "<" + cg.band_id[c] + ">";
    for (std::size_t r = 0; r < 3; ++r) {
      const auto& link = cg.links[c][r];
      out += std::to_string(label[link.to]);
      if (label[link.to] > label[c]) {
        out += word_text(link.word);
        if (r == 0 && !opt.include_reflection) out += link.along_rotation ? '>' : '<';
      }
      out += r < 2 ? ',' : ';';
    }
  }
  return out;
}

std::string lone_form(const ArrowList& word, bool reflect) {
  std::string best;
  bool first = true;
  std::vector<std::string> candidates{word_text(word)};
  if (reflect) candidates.push_back(word_text(reversed(word)));
  for (const auto& w : candidates) {
    for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
      std::string rotated = w.empty() ? w : w.substr(r) + w.substr(0, r);
      if (first || rotated < best) best = rotated;
      first = false;
    }
  }
  return "(" + best + ")";
}

}  // namespace

std::string canonical_form(const ArrowRibbonGraph& g, const CanonicalOptions& options) {
  if (options.max_edges != 0 && g.num_edges() > options.max_edges) {
    throw Error(Errc::SizeLimit, "canonical form limited to " + std::to_string(options.max_edges) + " edges, graph has " +
                                     std::to_string(g.num_edges()));
  }
  const Surface s = Surface::from_graph(g);
  const CornerGraph cg = corner_graph(s);
  const int n = static_cast<int>(cg.links.size());

  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (int c = 0; c < n; ++c) {
    if (component[c] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{c};
    component[c] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (const auto& link : cg.links[x]) {
        if (component[link.to] == -1) {
          component[link.to] = id;
          stack.push_back(link.to);
        }
      }
    }
  }

  std::vector<std::string> parts;
  for (const auto& corners : members) {
    std::string best;
    for (int start : corners) {
      std::string enc = encode_from(cg, start, options);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    parts.push_back("[" + best + "]");
  }
  for (const auto& lone : s.lone_vertices()) parts.push_back(lone_form(lone.arrows, options.include_reflection));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace arrowribbon
