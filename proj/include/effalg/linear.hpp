#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "effalg/rational.hpp"

namespace effalg {

struct LinearTerm {
    std::size_t variable = 0;
    Rational coefficient;
};

/// Σ coefficient·v = rhs.
struct LinearRow {
    std::vector<LinearTerm> terms;
    Rational rhs;
    std::string label;
};

/// Equality rows over variables that are all boxed in [0, 1].
struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearRow> equalities;
};

/// Farkas-style witness that a LinearSystem has no solution in the box.
///
/// With y = row_multipliers, z = upper_multipliers (for v ≤ 1) and
/// l = lower_multipliers (for v ≥ 0), a valid certificate satisfies
/// z ≥ 0, l ≥ 0, yᵀA − z + l = 0 column by column, and
/// gap = Σz − yᵀb < 0. Adding up the rows then gives 0 ≤ gap, a contradiction.
struct InfeasibilityCertificate {
    std::vector<Rational> row_multipliers;
    std::vector<Rational> upper_multipliers;
    std::vector<Rational> lower_multipliers;
};

struct FeasiblePoint {
    std::vector<Rational> values;
};

using FeasibilityResult = std::variant<FeasiblePoint, InfeasibilityCertificate>;

/// Phase-one simplex with Bland's rule over exact rationals.
FeasibilityResult solve_exact(const LinearSystem& system);

/// A vertex maximizing objectiveᵀv, or nothing when the system is infeasible.
std::optional<FeasiblePoint> maximize_exact(const LinearSystem& system, const std::vector<Rational>& objective);

/// Certificate supported on an irreducible infeasible subset of the rows, found by
/// a deletion filter in row order. Returns nothing if the system is feasible.
std::optional<InfeasibilityCertificate> irreducible_certificate(const LinearSystem& system);

/// True when `point` satisfies every row and bound exactly.
bool satisfies(const LinearSystem& system, const std::vector<Rational>& point);

struct CertificateCheck {
    bool valid = false;
    Rational gap;        // Σz − yᵀb; negative for a valid certificate
    std::string reason;  // why the check failed, empty when valid
};

/// Re-checks a certificate by direct arithmetic on the system rows.
CertificateCheck check_certificate(const LinearSystem& system, const InfeasibilityCertificate& certificate);

}  // namespace effalg
