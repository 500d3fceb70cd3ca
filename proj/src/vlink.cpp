#include "arrowribbon/vlink.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace arrowribbon {

// ------------------------------------------------------------ diagram

VirtualLinkDiagram::VirtualLinkDiagram(std::vector<std::vector<Passage>> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(Errc::InvalidLink, "a diagram needs at least one component");
  std::map<int, std::pair<int, int>> seen;  // crossing -> (over count, under count)
  for (const auto& comp : components_) {
    for (const auto& p : comp) {
      auto& [o, u] = seen[p.crossing];
      (p.over ? o : u) += 1;
      auto [it, fresh] = signs_.emplace(p.crossing, p.sign);
      if (!fresh && it->second != p.sign) {
        throw Error(Errc::InvalidLink, "crossing " + std::to_string(p.crossing) + " has inconsistent signs");
      }
    }
  }
  for (const auto& [c, counts] : seen) {
    if (counts.first != 1 || counts.second != 1) {
      throw Error(Errc::InvalidLink, "crossing " + std::to_string(c) + " must occur once over and once under");
    }
    crossings_.push_back(c);
  }
}

VirtualLinkDiagram VirtualLinkDiagram::parse(std::string_view text) {
  std::vector<std::vector<Passage>> comps(1);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::Parse, "Gauss code syntax error at position " + std::to_string(i) + ": " + what);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      ++i;
    } else if (ch == ';') {
      comps.emplace_back();
      ++i;
    } else if (ch == 'O' || ch == 'U') {
      Passage p;
      p.over = ch == 'O';
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      if (j == i + 1) {
        i = j;
        fail("expected crossing number");
      }
      if (j - i - 1 > 9) fail("crossing number too large");
      p.crossing = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (j >= text.size() || (text[j] != '+' && text[j] != '-')) {
        i = j;
        fail("expected '+' or '-'");
      }
      p.sign = text[j] == '+' ? Sign::Plus : Sign::Minus;
      i = j + 1;
      if (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0 && text[i] != ';') {
        fail("passages must be separated by whitespace");
      }
      comps.back().push_back(p);
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  return VirtualLinkDiagram(std::move(comps));
}

std::string VirtualLinkDiagram::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c > 0) out += components_[c].empty() ? ";" : "; ";
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const auto& p = components_[c][i];
      if (i > 0) out += ' ';
      out += (p.over ? 'O' : 'U') + std::to_string(p.crossing) + (p.sign == Sign::Plus ? '+' : '-');
    }
  }
  return out;
}

Sign VirtualLinkDiagram::sign(int crossing) const {
  auto it = signs_.find(crossing);
  if (it == signs_.end()) throw Error(Errc::InvalidArgument, "unknown crossing " + std::to_string(crossing));
  return it->second;
}

int VirtualLinkDiagram::writhe() const {
  int w = 0;
  for (const auto& [c, s] : signs_) w += s == Sign::Plus ? 1 : -1;
  return w;
}

// ------------------------------------------------------------ states

SplitState state_from_mask(const VirtualLinkDiagram& l, std::uint64_t mask) {
  SplitState s;
  for (std::size_t i = 0; i < l.num_crossings(); ++i) s[l.crossings()[i]] = ((mask >> i) & 1U) != 0 ? Split::B : Split::A;
  return s;
}

SplitState uniform_state(const VirtualLinkDiagram& l, Split choice) {
  SplitState s;
  for (int c : l.crossings()) s[c] = choice;
  return s;
}

bool is_oriented_smoothing(Sign sign, Split choice) { return (sign == Sign::Plus) == (choice == Split::A); }

SplitState seifert_state(const VirtualLinkDiagram& l) {
  SplitState s;
  for (int c : l.crossings()) s[c] = l.sign(c) == Sign::Plus ? Split::A : Split::B;
  return s;
}

SplitState disoriented_state(const VirtualLinkDiagram& l) {
  SplitState s;
  for (int c : l.crossings()) s[c] = l.sign(c) == Sign::Plus ? Split::B : Split::A;
  return s;
}

SplitState parse_state(const VirtualLinkDiagram& l, std::string_view text) {
  if (text == "allA") return uniform_state(l, Split::A);
  if (text == "allB") return uniform_state(l, Split::B);
  if (text == "seifert") return seifert_state(l);
  if (text == "disoriented") return disoriented_state(l);
  std::vector<Split> choices;
  for (char ch : text) {
    if (ch == 'A' || ch == 'B') {
      choices.push_back(ch == 'A' ? Split::A : Split::B);
    } else if (ch != ',' && std::isspace(static_cast<unsigned char>(ch)) == 0) {
      throw Error(Errc::Parse, std::string("state: unexpected character '") + ch + "'");
    }
  }
  if (choices.size() != l.num_crossings()) {
    throw Error(Errc::InvalidArgument, "state has " + std::to_string(choices.size()) + " choices, diagram has " +
                                           std::to_string(l.num_crossings()) + " crossings");
  }
  SplitState s;
  for (std::size_t i = 0; i < choices.size(); ++i) s[l.crossings()[i]] = choices[i];
  return s;
}

std::string state_to_string(const VirtualLinkDiagram& l, const SplitState& s) {
  std::string out;
  for (int c : l.crossings()) {
    if (!out.empty()) out += ',';
    auto it = s.find(c);
    out += it == s.end() ? '?' : (it->second == Split::A ? 'A' : 'B');
  }
  return out;
}

std::array<int, 4> ccw_order(Sign sign) {
  if (sign == Sign::Plus) return {kOverOut, kUnderOut, kOverIn, kUnderIn};
  return {kOverOut, kUnderIn, kOverIn, kUnderOut};
}

StateCircles smooth(const VirtualLinkDiagram& l, const SplitState& s) {
  const std::size_t n = l.num_crossings();
  std::map<int, int> index;
  for (std::size_t i = 0; i < n; ++i) index[l.crossings()[i]] = static_cast<int>(i);

  // Partners of every half-edge along the diagram and along the smoothing.
  std::vector<int> diagram(4 * n, -1);
  std::vector<int> smoothing(4 * n, -1);
  std::vector<bool> arrow_ccw(4 * n, false);  // smoothing arc from here is counterclockwise
  StateCircles out;
  for (const auto& comp : l.components()) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Passage& p = comp[i];
      const Passage& q = comp[(i + 1) % comp.size()];
      const int from = 4 * index[p.crossing] + (p.over ? kOverOut : kUnderOut);
      const int to = 4 * index[q.crossing] + (q.over ? kOverIn : kUnderIn);
      diagram[from] = to;
      diagram[to] = from;
    }
    if (comp.empty()) out.circles.emplace_back();
  }
  std::vector<bool> disoriented(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = l.crossings()[i];
    auto it = s.find(c);
    if (it == s.end()) throw Error(Errc::InvalidArgument, "state misses crossing " + std::to_string(c));
    const Sign sign = l.sign(c);
    (it->second == Split::A ? out.alpha : out.beta) += 1;
    disoriented[i] = !is_oriented_smoothing(sign, it->second);
    const auto h = ccw_order(sign);
    // A pairs h3-h0 and h1-h2, B pairs h0-h1 and h2-h3 (ccw order).
    const int first = it->second == Split::A ? 1 : 0;
    for (int j : {first, first + 2}) {
      const int lo = static_cast<int>(4 * i) + h[j];
      const int hi = static_cast<int>(4 * i) + h[(j + 1) % 4];
      smoothing[lo] = hi;
      smoothing[hi] = lo;
      arrow_ccw[lo] = true;
    }
  }

  std::vector<bool> visited(4 * n, false);
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (visited[start]) continue;
    StateCircle circle;
    int cur = static_cast<int>(start);
    do {
      visited[cur] = true;
      const int a = diagram[cur];
      visited[a] = true;
      const int b = smoothing[a];
      const int ci = a / 4;
      circle.smoothings.push_back(CircleStep{l.crossings()[ci], arrow_ccw[a]});
      if (disoriented[ci]) circle.arrows.push_back(arrow_ccw[a] ? Arrow::With : Arrow::Against);
      cur = b;
    } while (cur != static_cast<int>(start));
    circle.reduced_count = reduced_arrow_count(circle.arrows);
    out.circles.push_back(std::move(circle));
  }
  return out;
}

namespace {

LaurentPoly bracket(const VirtualLinkDiagram& l, bool with_arrows) {
  const std::size_t n = l.num_crossings();
  if (n >= 32) throw Error(Errc::SizeLimit, "too many crossings for a full state sum");
  LaurentPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const StateCircles sc = smooth(l, state_from_mask(l, mask));
    std::vector<Monomial::Factor> fs{{VarSymbol::plain(Family::A), kWhole * sc.alpha},
                                     {VarSymbol::plain(Family::B), kWhole * sc.beta},
                                     {VarSymbol::plain(Family::d), kWhole * (sc.delta() - 1)}};
    if (with_arrows) {
      for (const auto& c : sc.circles) {
        if (c.reduced_count > 0) fs.emplace_back(VarSymbol::k(c.reduced_count), kWhole);
      }
    }
    out.add_term(Monomial(std::move(fs)), 1);
  }
  return out;
}

}  // namespace

LaurentPoly kauffman_bracket(const VirtualLinkDiagram& l) { return bracket(l, false); }
LaurentPoly arrow_bracket(const VirtualLinkDiagram& l) { return bracket(l, true); }

LaurentPoly normalized_arrow(const VirtualLinkDiagram& l) {
  using namespace vars;
  const int w = l.writhe();
  const LaurentPoly sub = substitute(arrow_bracket(l), {{VarSymbol::plain(Family::B), A(-kWhole)},
                                                        {VarSymbol::plain(Family::d), -A(2 * kWhole) - A(-2 * kWhole)}});
  return LaurentPoly(w % 2 == 0 ? 1 : -1) * A(-3 * kWhole * w) * sub;
}

LaurentPoly jones(const VirtualLinkDiagram& l) {
  using namespace vars;
  const int w = l.writhe();
  const LaurentPoly sub = substitute(kauffman_bracket(l), {{VarSymbol::plain(Family::A), t(-1)},
                                                           {VarSymbol::plain(Family::B), t(1)},
                                                           {VarSymbol::plain(Family::d), -t(2) - t(-2)}});
  return LaurentPoly(w % 2 == 0 ? 1 : -1) * t(3 * w) * sub;
}

// ------------------------------------------------------------ moves

namespace {

struct Where {
  int component = -1;
  int index = -1;
};

struct Located {
  Where over;
  Where under;
};

std::map<int, Located> locate(const VirtualLinkDiagram& l) {
  std::map<int, Located> out;
  const auto& comps = l.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      auto& slot = comps[c][i].over ? out[comps[c][i].crossing].over : out[comps[c][i].crossing].under;
      slot = Where{static_cast<int>(c), static_cast<int>(i)};
    }
  }
  return out;
}

[[noreturn]] void mismatch(const std::string& what) { throw Error(Errc::MoveMismatch, what); }

// +1 if b directly follows a along the component, -1 if it directly
// precedes it, 0 otherwise. Two-passage components are ambiguous and give 0.
int adjacency(const VirtualLinkDiagram& l, Where a, Where b) {
  if (a.component != b.component) return 0;
  const int n = static_cast<int>(l.components()[a.component].size());
  if (n <= 2) return 0;
  if ((a.index + 1) % n == b.index) return 1;
  if ((b.index + 1) % n == a.index) return -1;
  return 0;
}

int next_crossing_id(const VirtualLinkDiagram& l) {
  return l.crossings().empty() ? 1 : l.crossings().back() + 1;
}

Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

void check_gap(const VirtualLinkDiagram& l, int component, int position) {
  if (component < 0 || component >= static_cast<int>(l.components().size())) mismatch("no such component");
  const int n = static_cast<int>(l.components()[component].size());
  if (position < -1 || position >= std::max(n, 0) || (n == 0 && position != -1)) mismatch("no such position");
}

void erase_passages(std::vector<std::vector<Passage>>& comps, const std::set<int>& crossings) {
  for (auto& comp : comps) {
    comp.erase(std::remove_if(comp.begin(), comp.end(), [&](const Passage& p) { return crossings.count(p.crossing) != 0; }),
               comp.end());
  }
}

// Sign of the crossing of two lines with directions (dx1,dy1) over (dx2,dy2).
int cross_sign(int dx1, int dy1, int dx2, int dy2) {
  const int c = dx1 * dy2 - dy1 * dx2;
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// Checks that x, y, z form a triangle whose top strand passes over x and y,
// middle strand under x and over z, bottom strand under y and z, with signs
// that some planar triangle realizes.
bool is_r3_triangle(const VirtualLinkDiagram& l, const std::map<int, Located>& at, int x, int y, int z) {
  const int top = adjacency(l, at.at(x).over, at.at(y).over);
  const int mid = adjacency(l, at.at(x).under, at.at(z).over);
  const int bot = adjacency(l, at.at(y).under, at.at(z).under);
  if (top == 0 || mid == 0 || bot == 0) return false;
  auto s = [&](int c) { return l.sign(c) == Sign::Plus ? 1 : -1; };
  for (int h : {1, -1}) {
    // x = (0,0), y = (1,0), z = (0,h).
    const int tx = top, ty = 0;
    const int mx = 0, my = mid * h;
    const int bx = -bot, by = bot * h;
    if (cross_sign(tx, ty, mx, my) == s(x) && cross_sign(tx, ty, bx, by) == s(y) && cross_sign(mx, my, bx, by) == s(z)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::array<int, 3>> r3_sites(const VirtualLinkDiagram& l) {
  std::vector<std::array<int, 3>> out;
  const auto at = locate(l);
  const auto& cs = l.crossings();
  for (int x : cs) {
    for (int y : cs) {
      for (int z : cs) {
        if (x == y || y == z || x == z) continue;
        if (is_r3_triangle(l, at, x, y, z)) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

VirtualLinkDiagram apply_move(const VirtualLinkDiagram& l, const Move& move) {
  auto comps = l.components();
  switch (move.kind) {
    case Move::Kind::Virtual:
      return l;

    case Move::Kind::R1Insert: {
      check_gap(l, move.component, move.position);
      const int id = next_crossing_id(l);
      const Passage o{id, true, move.sign};
      const Passage u{id, false, move.sign};
      auto& comp = comps[move.component];
      auto it = comp.begin() + (move.position + 1);
      it = comp.insert(it, move.over_first ? u : o);
      comp.insert(it, move.over_first ? o : u);
      return VirtualLinkDiagram(std::move(comps));
    }

    case Move::Kind::R1Remove: {
      if (move.crossings.size() != 1) mismatch("R1 removal takes one crossing");
      const int c = move.crossings[0];
      const auto at = locate(l);
      auto it = at.find(c);
      if (it == at.end()) mismatch("unknown crossing " + std::to_string(c));
      const Where o = it->second.over;
      const Where u = it->second.under;
      const bool two_only = o.component == u.component && l.components()[o.component].size() == 2;
      if (!two_only && adjacency(l, o, u) == 0) mismatch("crossing " + std::to_string(c) + " is not a kink");
      erase_passages(comps, {c});
      return VirtualLinkDiagram(std::move(comps));
    }

    case Move::Kind::R2Insert: {
      check_gap(l, move.component, move.position);
      check_gap(l, move.component2, move.position2);
      const int a = next_crossing_id(l);
      const int b = a + 1;
      const Sign sa = move.sign;
      const Sign sb = opposite(sa);
      const std::vector<Passage> over_pair{{a, true, sa}, {b, true, sb}};
      std::vector<Passage> under_pair{{a, false, sa}, {b, false, sb}};
      if (move.reverse_under) std::swap(under_pair[0], under_pair[1]);
      auto insert_at = [&](int comp, int pos, const std::vector<Passage>& ps) {
        auto& c = comps[comp];
        c.insert(c.begin() + (pos + 1), ps.begin(), ps.end());
      };
      if (move.component == move.component2 && move.position == move.position2) {
        std::vector<Passage> both = over_pair;
        both.insert(both.end(), under_pair.begin(), under_pair.end());
        insert_at(move.component, move.position, both);
      } else if (move.component == move.component2 && move.position2 > move.position) {
        insert_at(move.component2, move.position2, under_pair);
        insert_at(move.component, move.position, over_pair);
      } else {
        insert_at(move.component, move.position, over_pair);
        insert_at(move.component2, move.position2, under_pair);
      }
      return VirtualLinkDiagram(std::move(comps));
    }

    case Move::Kind::R2Remove: {
      if (move.crossings.size() != 2) mismatch("R2 removal takes two crossings");
      const int a = move.crossings[0];
      const int b = move.crossings[1];
      const auto at = locate(l);
      if (a == b || at.count(a) == 0 || at.count(b) == 0) mismatch("R2 removal needs two distinct crossings");
      if (l.sign(a) == l.sign(b)) mismatch("R2 crossings must have opposite signs");
      auto pair_adjacent = [&](Where p, Where q) {
        if (p.component != q.component) return false;
        const auto n = l.components()[p.component].size();
        if (n == 2) return true;
        return adjacency(l, p, q) != 0;
      };
      if (!pair_adjacent(at.at(a).over, at.at(b).over) || !pair_adjacent(at.at(a).under, at.at(b).under)) {
        mismatch("crossings " + std::to_string(a) + " and " + std::to_string(b) + " do not form a bigon");
      }
      erase_passages(comps, {a, b});
      return VirtualLinkDiagram(std::move(comps));
    }

    case Move::Kind::R3: {
      if (move.crossings.size() != 3) mismatch("R3 takes three crossings");
      const int x = move.crossings[0];
      const int y = move.crossings[1];
      const int z = move.crossings[2];
      const auto at = locate(l);
      for (int c : move.crossings) {
        if (at.count(c) == 0) mismatch("unknown crossing " + std::to_string(c));
      }
      if (x == y || y == z || x == z || !is_r3_triangle(l, at, x, y, z)) mismatch("crossings do not form an R3 triangle");
      auto swap_pair = [&](Where p, Where q) { std::swap(comps[p.component][p.index], comps[q.component][q.index]); };
      swap_pair(at.at(x).over, at.at(y).over);
      swap_pair(at.at(x).under, at.at(z).over);
      swap_pair(at.at(y).under, at.at(z).under);
      return VirtualLinkDiagram(std::move(comps));
    }
  }
  mismatch("unknown move");
}

}  // namespace arrowribbon
