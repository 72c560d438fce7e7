#include "effalg/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace effalg {

std::optional<ElementId> family_sum(const EffectAlgebra& algebra, std::span<const AtomMultiple> parts) {
    ElementId acc = algebra.zero();
    for (const auto& part : parts) {
        auto m = multiple(algebra, part.atom, part.multiplicity);
        if (!m) return std::nullopt;
        auto next = algebra.sum(acc, *m);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

AtomicDecomposition atomic_decomposition(const Analysis& analysis, ElementId x) {
    const auto& algebra = analysis.algebra();
    const auto& atoms = analysis.profile().atoms;
    AtomicDecomposition result;
    result.unique = analysis.is_lattice();

    ElementId residual = x;
    std::vector<char> used(algebra.size(), 0);
    while (residual != algebra.zero()) {
        auto it = std::find_if(atoms.begin(), atoms.end(),
                               [&](ElementId a) { return algebra.leq(a, residual); });
        if (it == atoms.end()) {
            throw NotDecomposable("no atom lies below " + algebra.name(residual) + " while decomposing " +
                                  algebra.name(x));
        }
        const ElementId atom = *it;
        // If a ≤ r ⊖ ka held, then (k+1)a ≤ r and k was not maximal, so an atom is
        // never selected twice.
        if (used[atom.index]) throw std::logic_error("atom selected twice in greedy decomposition");
        used[atom.index] = 1;

        std::size_t k = 1;
        ElementId block = atom;
        while (auto next = algebra.sum(block, atom)) {
            if (!algebra.leq(*next, residual)) break;
            block = *next;
            ++k;
        }
        result.parts.push_back({atom, k});
        residual = *algebra.difference(residual, block);
    }
    return result;
}

DecompositionSplit split_atomic_decomposition(const Analysis& analysis, const AtomicDecomposition& d) {
    const auto& algebra = analysis.algebra();
    std::vector<ElementId> seen;
    for (const auto& part : d.parts) {
        if (part.atom.index >= algebra.size() || !analysis.profile().is_atom(part.atom)) {
            throw InvalidDecomposition("part is not an atom");
        }
        if (std::find(seen.begin(), seen.end(), part.atom) != seen.end()) {
            throw InvalidDecomposition("atom " + algebra.name(part.atom) + " occurs twice");
        }
        seen.push_back(part.atom);
        if (part.multiplicity == 0 || part.multiplicity > analysis.ord(part.atom)) {
            throw InvalidDecomposition("multiplicity of " + algebra.name(part.atom) + " outside 1..ord");
        }
    }
    if (!family_sum(algebra, d.parts)) throw InvalidDecomposition("family is not orthogonal");

    DecompositionSplit split;
    split.full.unique = split.partial.unique = d.unique;
    for (const auto& part : d.parts) {
        auto& target = part.multiplicity == analysis.ord(part.atom) ? split.full : split.partial;
        target.parts.push_back(part);
    }
    // Sub-families of an orthogonal family are orthogonal.
    split.full_sum = *family_sum(algebra, split.full.parts);
    split.partial_sum = *family_sum(algebra, split.partial.parts);
    return split;
}

BasicDecomposition basic_decomposition(const Analysis& analysis, ElementId x) {
    const auto& algebra = analysis.algebra();
    if (!analysis.is_lattice()) {
        throw PreconditionFailed("basic decomposition requires a lattice ordered effect algebra");
    }
    const auto kernel = analysis.profile().sharp_bounds.at(x.index).kernel;
    if (!kernel) {
        throw PreconditionFailed("no greatest sharp element below " + algebra.name(x));
    }

    BasicDecomposition result{*kernel, atomic_decomposition(analysis, *algebra.difference(x, *kernel))};
    for (const auto& part : result.meager_parts.parts) {
        if (part.multiplicity == analysis.ord(part.atom)) {
            throw std::logic_error("meager remainder of " + algebra.name(x) + " contains a full atom multiple");
        }
    }

    // Cross-check against the split of a direct decomposition of x.
    const auto split = split_atomic_decomposition(analysis, atomic_decomposition(analysis, x));
    auto expected = result.meager_parts.parts;
    auto actual = split.partial.parts;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (split.full_sum != *kernel || expected != actual) {
        throw std::logic_error("basic decomposition of " + algebra.name(x) +
                               " disagrees with the split of its atomic decomposition");
    }
    return result;
}

}  // namespace effalg
