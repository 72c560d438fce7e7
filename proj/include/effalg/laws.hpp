#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "effalg/analysis.hpp"

namespace effalg {

enum class LawStatus { Pass, Fail, Skipped };

std::string_view status_label(LawStatus status);

struct LawResult {
    std::string law;
    LawStatus status = LawStatus::Skipped;
    std::vector<std::string> witnesses;  // element names, set on failure
    std::string detail;                  // failure description or skip reason
};

struct LawReport {
    std::vector<LawResult> results;

    bool ok() const;
    const LawResult* find(std::string_view law) const;
};

struct LawOptions {
    /// Check lattice-hypothesis conclusions on algebras that are not lattice
    /// ordered instead of skipping them. Missing meets or joins count as failures.
    bool counterexample_mode = false;
    /// Law ids to run, in suite order regardless of the order given. Empty runs all.
    std::vector<std::string> selection;
};

/// Every law id, in suite order:
///
///   orthogonal-sum-join-meet     x ⊕ y = (x ∨ y) ⊕ (x ∧ y)
///   sum-distributes-over-join    (x ∨ y) ⊕ z = (x ⊕ z) ∨ (y ⊕ z) for x, y ≤ z'
///   disjoint-multiples           x ∧ y = 0 ⇒ kx ∧ ly = 0 and kx ∨ ly = kx ⊕ ly
///   compatible-meet-distributes  x ↔ Y ⇒ x ∧ ⋁Y = ⋁(x ∧ y) and x ↔ ⋁Y
///   atom-multiple-unsharp        ka is not sharp for k < ord(a)
///   atom-saturation-sharp        ord(a)·a is sharp, no smaller multiple is
///   atom-interval-multiples      a ≤ x ≤ ka ⇒ x = ra
///   atom-multiple-injective      ka = lb with k ≠ ord(a) ⇒ a = b, k = l
///   atomic-decomposition         x = ⊕ k·a = ⋁ k·a, sharp iff every k is ord(a)
///   atom-multiple-domination     ka ≤ lb forces a = b or noncompatibility
///   meager-decomposition-unique  equal sums of sub-ord multiples have equal families
///   sharp-kernel-equivalence     sharp cover ⇔ sharp kernel ⇔ unique meager remainder
///   basic-decomposition          Archimedean and sharply dominating ⇔ unique v ⊕ ⊕k·a
///   atom-sharp-cover             ord(a)·a is the least sharp element above a
///   decomposition-split          full multiples sum to the kernel, the rest to x ⊖ kernel
///   state-smearing               every state on S(E) extends to E
///   sharp-subalgebra             S(E) is a sub-effect algebra and orthomodular
///   sharp-full-sublattice        S(E) is closed under meets and joins
///   product-closure              E × C2 keeps lattice, atomic, Archimedean, sharply dominating
const std::vector<std::string>& law_ids();

/// Runs the selected laws by exhaustive quantification over the carrier.
/// Throws Error for an unknown law id in the selection.
LawReport run_law_suite(const Analysis& analysis, const LawOptions& options = {});

}  // namespace effalg
