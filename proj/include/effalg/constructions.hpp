#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effalg/algebra.hpp"

namespace effalg {

/// The chain {0, a, 2a, ..., (n-1)a, 1 = na} with ka ⊕ la defined iff k + l ≤ n.
/// Elements are indexed by multiplicity.
EffectAlgebra mv_chain(std::size_t n, std::string_view generator = "a");

/// Subsets of a k-element set under disjoint union, 1 ≤ k ≤ 6. Element index is
/// the subset bitmask; names concatenate the atom letters p, q, r, s, t, u, with
/// "0" and "1" for the empty and full set. Throws SizeLimit outside that range.
EffectAlgebra boolean_algebra(std::size_t k);

/// Blocks glued at 0 and 1, sums defined only inside a block. Names are kept
/// when the non-bound names are disjoint across blocks and otherwise suffixed
/// with `_<block>` (1-based). A single block is returned unchanged.
/// Throws DegenerateBlock for a block with fewer than three elements.
EffectAlgebra horizontal_sum(std::span<const EffectAlgebra> parts);

/// Componentwise sums on E1 × E2; element (x, y) has index x·|E2| + y and name "(x,y)".
EffectAlgebra direct_product(const EffectAlgebra& left, const EffectAlgebra& right);

/// Names accepted by `fixture`, in a fixed order.
const std::vector<std::string>& fixture_names();

/// EAF text of a shipped counterexample fixture. Throws UnknownFixture.
std::string_view fixture_text(std::string_view name);

/// A shipped counterexample fixture, parsed and validated:
///  - "coinciding-multiples": 2a = 2b with a ≠ b, no join of a and b
///  - "stateless": admits no state
EffectAlgebra fixture(std::string_view name);

}  // namespace effalg
