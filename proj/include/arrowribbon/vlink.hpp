#pragma once

// Virtual link diagrams as signed Gauss codes.
//
// Text form: components separated by ';', passages "O<n><sign>" or
// "U<n><sign>" separated by whitespace. "" is the crossingless unknot.
//
// Local model of a crossing: four half-edges, the incoming and outgoing ends
// of the over and under strands (oi, oo, ui, uo). Counterclockwise around a
// positive crossing they read oo, uo, oi, ui; around a negative one oo, ui,
// oi, uo. The A-smoothing joins every over half-edge to its clockwise
// neighbour, the B-smoothing to its counterclockwise neighbour. A smoothing
// arc always turns counterclockwise around the crossing, and on a
// disoriented smoothing it carries an arrow in that direction.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arrowribbon/polyring.hpp"
#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

struct Passage {
  int crossing = 0;
  bool over = true;
  Sign sign = Sign::Plus;

  friend bool operator==(const Passage&, const Passage&) = default;
};

enum class Split : std::uint8_t { A, B };

/// Choice per crossing id.
using SplitState = std::map<int, Split>;

class VirtualLinkDiagram {
 public:
  VirtualLinkDiagram() = default;
  /// Validates: each crossing appears once over and once under with one sign.
  explicit VirtualLinkDiagram(std::vector<std::vector<Passage>> components);

  /// Throws Error(Parse) on bad syntax and Error(InvalidLink) on a bad code.
  static VirtualLinkDiagram parse(std::string_view text);
  std::string to_string() const;

  const std::vector<std::vector<Passage>>& components() const { return components_; }
  /// Crossing ids in increasing order.
  const std::vector<int>& crossings() const { return crossings_; }
  std::size_t num_crossings() const { return crossings_.size(); }
  Sign sign(int crossing) const;
  int writhe() const;

  friend bool operator==(const VirtualLinkDiagram& a, const VirtualLinkDiagram& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<std::vector<Passage>> components_;
  std::vector<int> crossings_;
  std::map<int, Sign> signs_;
};

inline VirtualLinkDiagram parse_gauss(std::string_view text) { return VirtualLinkDiagram::parse(text); }
inline int writhe(const VirtualLinkDiagram& l) { return l.writhe(); }

/// Bit i of `mask` chooses B at the i-th crossing (in id order).
SplitState state_from_mask(const VirtualLinkDiagram& l, std::uint64_t mask);
SplitState uniform_state(const VirtualLinkDiagram& l, Split choice);
/// The oriented smoothing everywhere: A at positive, B at negative crossings.
SplitState seifert_state(const VirtualLinkDiagram& l);
/// The disoriented smoothing everywhere.
SplitState disoriented_state(const VirtualLinkDiagram& l);
/// "A,B,A" in crossing order, or one of allA, allB, seifert, disoriented.
SplitState parse_state(const VirtualLinkDiagram& l, std::string_view text);
std::string state_to_string(const VirtualLinkDiagram& l, const SplitState& s);

bool is_oriented_smoothing(Sign sign, Split choice);

/// Half-edges: 4 per crossing, index 4*i + k for the i-th crossing with
/// k = 0 oi, 1 oo, 2 ui, 3 uo.
enum HalfEdge : int { kOverIn = 0, kOverOut = 1, kUnderIn = 2, kUnderOut = 3 };

/// The four half-edges of a crossing in counterclockwise order, starting at oo.
std::array<int, 4> ccw_order(Sign sign);

struct CircleStep {
  int crossing = 0;
  bool smoothing_forward = true;  // smoothing arc walked counterclockwise
};

struct StateCircle {
  std::vector<CircleStep> smoothings;  // smoothing arcs met along the circle
  ArrowList arrows;                    // With = arrow along the walk
  int reduced_count = 0;               // twice the K subscript
};

struct StateCircles {
  std::vector<StateCircle> circles;
  int delta() const { return static_cast<int>(circles.size()); }
  int alpha = 0;  // number of A choices
  int beta = 0;   // number of B choices
};

/// Throws Error(InvalidArgument) if `s` misses a crossing.
StateCircles smooth(const VirtualLinkDiagram& l, const SplitState& s);

/// <L>(A, B, d).
LaurentPoly kauffman_bracket(const VirtualLinkDiagram& l);
/// <L>_A(A, B, d, K).
LaurentPoly arrow_bracket(const VirtualLinkDiagram& l);
/// (-A^3)^-w <L>_A(A, 1/A, -A^2 - A^-2).
LaurentPoly normalized_arrow(const VirtualLinkDiagram& l);
/// (-1)^w t^(3w/4) <L>(t^-1/4, t^1/4, -t^1/2 - t^-1/2).
LaurentPoly jones(const VirtualLinkDiagram& l);

// ------------------------------------------------------------ moves

struct Move {
  enum class Kind : std::uint8_t {
    R1Insert,
    R1Remove,
    R2Insert,
    R2Remove,
    R3,
    Virtual,
  };
  Kind kind = Kind::Virtual;
  // R1Insert: kink after passage `position` of component `component`
  // (-1 = at the start); `sign`; `over_first` puts the over passage first.
  // R2Insert: over pair after (component, position), under pair after
  // (component2, position2); `over_first` is unused; `reverse_under` lays the
  // under pair in the order b, a; `sign` is the sign of the first crossing.
  // R1Remove / R2Remove / R3: crossing ids in `crossings`.
  int component = 0;
  int position = -1;
  int component2 = 0;
  int position2 = -1;
  Sign sign = Sign::Plus;
  bool over_first = true;
  bool reverse_under = false;
  std::vector<int> crossings;
};

/// Rewrites the code. Throws Error(MoveMismatch) if the move does not apply
/// at the given location.
VirtualLinkDiagram apply_move(const VirtualLinkDiagram& l, const Move& move);

/// All R3 triples (x, y, z) that apply_move accepts.
std::vector<std::array<int, 3>> r3_sites(const VirtualLinkDiagram& l);

}  // namespace arrowribbon
