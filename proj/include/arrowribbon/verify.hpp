#pragma once

// Property checks on a single graph: partial duality laws, the
// contraction-deletion recurrences and the polynomial identities.

#include <cstdint>
#include <string>
#include <vector>

#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/ribbon.hpp"

namespace arrowribbon {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

struct PropertyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct VerifyOptions {
  /// Every edge subset is used up to this many edges, random ones above.
  std::size_t exhaustive_edges = 6;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  StateSumOptions state_sums;
};

/// (a) G^0 = G, (b) G^E = G*, (c) (G^D)^D' = G^(D xor D'), (d) orientability,
/// (e) components, |V(G^D)| = bc(D), and the mixed identities for e not in D.
PropertyReport verify_duality_properties(const ArrowRibbonGraph& g, const VerifyOptions& options = {});

/// Contraction-deletion (both cases and a = 1), the a = 1 partial duality
/// identity, BR = Z relation and genus parity.
PropertyReport verify_polynomial_properties(const ArrowRibbonGraph& g, const VerifyOptions& options = {});

PropertyReport verify_properties(const ArrowRibbonGraph& g, const VerifyOptions& options = {});

}  // namespace arrowribbon
