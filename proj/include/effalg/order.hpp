#pragma once

#include <optional>
#include <vector>

#include "effalg/algebra.hpp"

namespace effalg {

struct Bounds {
    std::optional<ElementId> meet;
    std::optional<ElementId> join;
};

/// The induced order a ≤ b ⇔ ∃c: a ⊕ c = b, with every existing pairwise
/// meet and join.
class OrderStructure {
  public:
    OrderStructure() = default;

    std::size_t size() const noexcept { return n_; }
    bool leq(ElementId a, ElementId b) const { return leq_[a.index * n_ + b.index] != 0; }
    std::optional<ElementId> meet(ElementId a, ElementId b) const { return meet_[a.index * n_ + b.index]; }
    std::optional<ElementId> join(ElementId a, ElementId b) const { return join_[a.index * n_ + b.index]; }
    bool is_lattice() const noexcept { return lattice_; }
    bool is_mv() const noexcept { return mv_; }

  private:
    friend OrderStructure derive_order(const EffectAlgebra& algebra);

    std::size_t n_ = 0;
    std::vector<char> leq_;
    std::vector<std::optional<ElementId>> meet_;
    std::vector<std::optional<ElementId>> join_;
    bool lattice_ = false;
    bool mv_ = false;
};

OrderStructure derive_order(const EffectAlgebra& algebra);

Bounds compute_bounds(const OrderStructure& order, ElementId x, ElementId y);

/// x ∨ y = x ⊕ (y ⊖ (x ∧ y)). Throws BoundsMissing when the meet or join is absent.
bool compatible(const EffectAlgebra& algebra, const OrderStructure& order, ElementId x, ElementId y);

struct Classification {
    bool is_lattice = false;
    bool is_mv = false;
    bool is_orthomodular_image = false;  // lattice in which every element is sharp
};

Classification classify(const EffectAlgebra& algebra, const OrderStructure& order);

/// Greatest element of `candidates` under `order`, if one exists.
std::optional<ElementId> greatest(const OrderStructure& order, const std::vector<ElementId>& candidates);
/// Least element of `candidates` under `order`, if one exists.
std::optional<ElementId> least(const OrderStructure& order, const std::vector<ElementId>& candidates);

}  // namespace effalg
