#pragma once

// Enumeration of spanning subgraphs with their boundary data.

#include <cstdint>
#include <functional>
#include <vector>

#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/surface.hpp"

namespace arrowribbon::detail {

struct StateInfo {
  std::uint64_t mask = 0;
  EdgeSubset f;
  int size = 0;  // |F|
  int k = 0;
  int bc = 0;
  int r = 0;
  int n = 0;
  bool orientable = true;
  std::vector<int> reduced;  // reduced arrow count per boundary component
  int minus_in = 0;          // negative edges in F
  int minus_out = 0;         // negative edges outside F

  int genus_like() const { return k - bc + n; }
};

class StateEnumerator {
 public:
  explicit StateEnumerator(const ArrowRibbonGraph& g);

  std::size_t num_edges() const { return g_.num_edges(); }
  void evaluate(std::uint64_t mask, StateInfo& out) const;

 private:
  const ArrowRibbonGraph& g_;
  Surface surface_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

/// K monomial of a state.
Monomial k_monomial(const std::vector<int>& reduced);

using StateTerm = std::function<void(const StateInfo&, LaurentPoly&)>;

/// Sums `term` over all subsets, possibly on several threads. The result is
/// independent of the thread count.
LaurentPoly sum_over_states(const ArrowRibbonGraph& g, const StateSumOptions& options, const StateTerm& term);

}  // namespace arrowribbon::detail
