#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "effalg/analysis.hpp"

namespace effalg {

/// k·a for an atom a, 1 ≤ k ≤ ord(a).
struct AtomMultiple {
    ElementId atom;
    std::size_t multiplicity = 1;

    friend auto operator<=>(const AtomMultiple&, const AtomMultiple&) = default;
};

struct AtomicDecomposition {
    std::vector<AtomMultiple> parts;  // pairwise distinct atoms
    /// False when the algebra is not lattice ordered, where decompositions of
    /// the same element need not agree.
    bool unique = true;
};

struct DecompositionSplit {
    AtomicDecomposition full;     // multiplicity == ord(atom)
    AtomicDecomposition partial;  // multiplicity != ord(atom)
    ElementId full_sum;
    ElementId partial_sum;
};

/// x = sharp_part ⊕ (⊕ meager parts), every meager multiplicity ≠ ord(atom).
struct BasicDecomposition {
    ElementId sharp_part;
    AtomicDecomposition meager_parts;
};

/// Iterated sum of k·a over the family, or nothing if some partial sum is undefined.
std::optional<ElementId> family_sum(const EffectAlgebra& algebra, std::span<const AtomMultiple> parts);

/// Greedy decomposition of x into multiples of distinct atoms.
/// Throws NotDecomposable if no atom lies under a nonzero residual.
AtomicDecomposition atomic_decomposition(const Analysis& analysis, ElementId x);

/// Partitions a decomposition by whether each multiplicity reaches the atom's
/// isotropic index. Throws InvalidDecomposition for a malformed family.
DecompositionSplit split_atomic_decomposition(const Analysis& analysis, const AtomicDecomposition& d);

/// Sharp kernel of x plus the atomic decomposition of the meager remainder.
/// Throws PreconditionFailed on algebras that are not lattice ordered.
BasicDecomposition basic_decomposition(const Analysis& analysis, ElementId x);

}  // namespace effalg
