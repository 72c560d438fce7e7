#pragma once

#include <optional>
#include <vector>

#include "effalg/algebra.hpp"

namespace effalg::testing {

struct OracleDecomposition {
    ElementId sharp_part;
    std::vector<std::pair<ElementId, std::size_t>> parts;  // (atom, k), ascending atom index
};

/// Every way to write x as v ⊕ (⊕ k·a) with v sharp and 1 ≤ k < ord(a) over
/// distinct atoms a. Works from the sum table alone, without the library's
/// order or structure code.
std::vector<OracleDecomposition> enumerate_decompositions(const EffectAlgebra& algebra, ElementId x);

}  // namespace effalg::testing
