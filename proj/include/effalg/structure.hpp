#pragma once

#include <optional>
#include <vector>

#include "effalg/algebra.hpp"
#include "effalg/order.hpp"

namespace effalg {

/// Smallest sharp element above x (cover) and greatest sharp element below x (kernel).
struct SharpBounds {
    std::optional<ElementId> cover;
    std::optional<ElementId> kernel;
};

struct StructureFlags {
    bool atomic = false;
    bool archimedean = false;
    bool sharply_dominating = false;
    bool s_dominating = false;
};

/// Atoms, sharp and meager elements, isotropic indices and the derived flags.
///
/// Element sets are sorted by index. `ord` is indexed by element and holds 0 for
/// the zero element.
struct StructureProfile {
    std::vector<ElementId> atoms;
    std::vector<ElementId> sharp;
    std::vector<ElementId> meager;
    std::vector<std::size_t> ord;
    std::vector<SharpBounds> sharp_bounds;
    StructureFlags flags;

    bool is_atom(ElementId x) const { return atom_mask_.at(x.index) != 0; }
    bool is_sharp(ElementId x) const { return sharp_mask_.at(x.index) != 0; }
    bool is_meager(ElementId x) const { return meager_mask_.at(x.index) != 0; }

  private:
    friend StructureProfile profile_structure(const EffectAlgebra&, const OrderStructure&);

    std::vector<char> atom_mask_;
    std::vector<char> sharp_mask_;
    std::vector<char> meager_mask_;
};

StructureProfile profile_structure(const EffectAlgebra& algebra, const OrderStructure& order);

/// Minimal nonzero elements.
std::vector<ElementId> atoms(const EffectAlgebra& algebra);

/// x is sharp when 0 is the only common lower bound of x and x'. This agrees
/// with x ∧ x' = 0 whenever that meet exists and stays total otherwise.
bool is_sharp(const EffectAlgebra& algebra, ElementId x);

std::vector<ElementId> sharp_elements(const EffectAlgebra& algebra);

/// Greatest n with n·x defined. Throws ZeroElement for x = 0.
std::size_t isotropic_index(const EffectAlgebra& algebra, ElementId x);

SharpBounds sharp_bounds(const EffectAlgebra& algebra, ElementId x);

bool is_sharply_dominating(const EffectAlgebra& algebra);

/// Elements whose only sharp lower bound is 0.
std::vector<ElementId> meager_elements(const EffectAlgebra& algebra);

/// Sharply dominating, and x ∧ p exists for every x and every sharp p.
bool is_s_dominating(const EffectAlgebra& algebra, const OrderStructure& order);

/// A sub-effect algebra carried as its own algebra plus the embedding into
/// the parent (`embedding[i]` is the parent id of sub-element i).
struct SubAlgebra {
    EffectAlgebra algebra;
    std::vector<ElementId> embedding;

    /// Sub-element id of a parent element, if it belongs to the subalgebra.
    std::optional<ElementId> locate(ElementId parent) const;
};

/// Extracts `members` (which must contain 0 and 1) with the inherited
/// operation. Throws AxiomViolation when the restriction is not an effect algebra.
SubAlgebra extract_subalgebra(const EffectAlgebra& algebra, const std::vector<ElementId>& members);

/// S(E) as a standalone effect algebra, in ascending parent index order.
SubAlgebra sharp_subalgebra(const EffectAlgebra& algebra);

}  // namespace effalg
