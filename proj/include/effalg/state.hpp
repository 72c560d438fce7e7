#pragma once

#include <string>
#include <variant>
#include <vector>

#include "effalg/analysis.hpp"
#include "effalg/linear.hpp"
#include "effalg/rational.hpp"

namespace effalg {

/// Values of a state, indexed by element id of the algebra it lives on.
struct State {
    std::vector<Rational> values;

    const Rational& operator[](ElementId x) const { return values.at(x.index); }
    friend bool operator==(const State&, const State&) = default;
};

/// One variable per element; one row v_z − v_x − v_y = 0 per defined sum x ⊕ y = z
/// with x ≤ y by index and x, y nonzero; then v_0 = 0 and v_1 = 1.
LinearSystem state_system(const EffectAlgebra& algebra);

using StateSearch = std::variant<State, InfeasibilityCertificate>;

/// A state, or an irreducible certificate that none exists. A found state is
/// re-verified with `verify_state` before it is returned.
StateSearch find_state(const EffectAlgebra& algebra);

/// Extreme states obtained by maximizing and minimizing each element value,
/// deduplicated and in discovery order. Empty when the algebra is stateless.
std::vector<State> extreme_states(const EffectAlgebra& algebra);

enum class StateViolationKind { Domain, Bound, Zero, Unit, Additivity };

std::string_view violation_label(StateViolationKind kind);

struct StateViolation {
    StateViolationKind kind;
    std::vector<ElementId> witnesses;
    std::string detail;
};

struct StateReport {
    std::vector<StateViolation> violations;
    bool faithful = false;  // ω(x) = 0 only for x = 0

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks a candidate mapping against the state conditions over the full closed table.
StateReport verify_state(const EffectAlgebra& algebra, const std::vector<Rational>& candidate);

/// Restriction of a state on E to the sharp subalgebra (indexed like `sharp_part()`).
State restrict_to_sharp(const Analysis& analysis, const State& state);

/// Extends a state on S(E) to E: atoms get ω(n_a·a)/n_a, and every x with basic
/// decomposition v_x ⊕ (⊕ k_α a_α) gets ω(v_x) + Σ k_α·ω̂(a_α).
/// Throws PreconditionFailed unless E is a lattice and InvalidState when `sharp_state`
/// is not a state on S(E).
State smear_state(const Analysis& analysis, const State& sharp_state);

}  // namespace effalg
