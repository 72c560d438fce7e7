#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effalg/document.hpp"
#include "effalg/element.hpp"
#include "effalg/errors.hpp"

namespace effalg {

/// Partial operation table as declared, before closure and validation.
///
/// Only ordered pairs are stored. Symmetry and `0 ⊕ x = x` are implied and
/// added by `closed()`; a conflicting reverse orientation is kept as declared
/// so that `verify_axioms` can report it.
class SumTable {
  public:
    SumTable(std::size_t size, ElementId zero, ElementId one);

    /// Records x ⊕ y = z. Throws DuplicateSum when (x, y) already maps elsewhere.
    void declare(ElementId x, ElementId y, ElementId z);

    std::optional<ElementId> sum(ElementId x, ElementId y) const;

    /// Copy closed under commutativity and the zero rows. Where (x,y) and (y,x)
    /// disagree both entries are left untouched.
    SumTable closed() const;

    std::size_t size() const noexcept { return size_; }
    ElementId zero() const noexcept { return zero_; }
    ElementId one() const noexcept { return one_; }

  private:
    std::size_t size_;
    ElementId zero_;
    ElementId one_;
    std::vector<std::optional<ElementId>> entries_;
};

enum class Axiom {
    Commutativity,  // a ⊕ b = b ⊕ a
    Associativity,  // (a ⊕ b) ⊕ c = a ⊕ (b ⊕ c) when either side exists
    Supplement,     // unique a' with a ⊕ a' = 1
    Unit,           // 1 ⊕ a defined only for a = 0
    Closure,        // declared zero rows contradict 0 ⊕ x = x
};

std::string_view axiom_label(Axiom axiom);

struct AxiomViolationRecord {
    Axiom axiom;
    std::vector<ElementId> witnesses;  // at most three
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolationRecord> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks the closure of `table` against the effect algebra axioms. Details name
/// elements by `names` when given and by `#index` otherwise.
/// At most `kMaxWitnessesPerAxiom` records are kept per axiom; the last one
/// mentions how many were dropped.
AxiomReport verify_axioms(const SumTable& table, std::span<const std::string> names = {});

inline constexpr std::size_t kMaxWitnessesPerAxiom = 16;

class AxiomViolation : public Error {
  public:
    explicit AxiomViolation(AxiomReport report);
    const AxiomReport& report() const noexcept { return report_; }

  private:
    AxiomReport report_;
};

/// A validated finite effect algebra. Immutable after construction.
class EffectAlgebra {
  public:
    /// Closes and validates `table`. Throws AxiomViolation, DegenerateAlgebra,
    /// or Error when `names` does not match the table size.
    static EffectAlgebra from_table(const SumTable& table, std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    ElementId zero() const noexcept { return zero_; }
    ElementId one() const noexcept { return one_; }
    auto elements() const { return element_range(size()); }

    std::optional<ElementId> sum(ElementId x, ElementId y) const {
        return sums_[x.index * size() + y.index];
    }

    /// b ⊖ a: the unique c with a ⊕ c = b, when a ≤ b.
    std::optional<ElementId> difference(ElementId b, ElementId a) const {
        return differences_[b.index * size() + a.index];
    }

    bool leq(ElementId a, ElementId b) const { return difference(b, a).has_value(); }

    ElementId supplement(ElementId x) const { return supplement_[x.index]; }

    const std::string& name(ElementId x) const { return names_.at(x.index); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ElementId> find(std::string_view name) const;

    /// The closed table, for serialization and sub-structure extraction.
    SumTable table() const;

  private:
    EffectAlgebra() = default;

    std::vector<std::string> names_;
    ElementId zero_;
    ElementId one_;
    std::vector<std::optional<ElementId>> sums_;
    std::vector<std::optional<ElementId>> differences_;
    std::vector<ElementId> supplement_;
};

/// Resolves names, closes the declared table and validates it.
EffectAlgebra build_effect_algebra(const EafDocument& doc);

/// Declares every sum of `doc` into a table without validating it.
SumTable declared_table(const EafDocument& doc);

std::optional<ElementId> partial_sum(const EffectAlgebra& algebra, ElementId x, ElementId y);
std::optional<ElementId> partial_difference(const EffectAlgebra& algebra, ElementId b, ElementId a);

/// k·x, i.e. x ⊕ x ⊕ ... ⊕ x (k times); 0·x = 0.
std::optional<ElementId> multiple(const EffectAlgebra& algebra, ElementId x, std::size_t k);

}  // namespace effalg
