#include "effalg/state.hpp"

#include <algorithm>
#include <stdexcept>

#include "effalg/decomposition.hpp"

namespace effalg {

LinearSystem state_system(const EffectAlgebra& algebra) {
    LinearSystem system;
    system.variables = algebra.names();
    const ElementId zero = algebra.zero();
    for (auto x : algebra.elements()) {
        if (x == zero) continue;
        for (auto y : algebra.elements()) {
            if (y < x || y == zero) continue;
            auto z = algebra.sum(x, y);
            if (!z) continue;
            LinearRow row;
            row.label = "sum " + algebra.name(x) + " " + algebra.name(y) + " = " + algebra.name(*z);
            row.terms.push_back({z->index, 1});
            if (x == y) {
                row.terms.push_back({x.index, -2});
            } else {
                row.terms.push_back({x.index, -1});
                row.terms.push_back({y.index, -1});
            }
            row.rhs = 0;
            system.equalities.push_back(std::move(row));
        }
    }
    system.equalities.push_back({{{zero.index, 1}}, 0, "zero " + algebra.name(zero)});
    system.equalities.push_back({{{algebra.one().index, 1}}, 1, "unit " + algebra.name(algebra.one())});
    return system;
}

StateSearch find_state(const EffectAlgebra& algebra) {
    const LinearSystem system = state_system(algebra);
    auto result = solve_exact(system);
    if (auto* point = std::get_if<FeasiblePoint>(&result)) {
        State state{std::move(point->values)};
        if (!verify_state(algebra, state.values).ok()) {
            throw std::logic_error("solver returned a point that is not a state");
        }
        return state;
    }
    auto certificate = irreducible_certificate(system);
    if (!certificate || !check_certificate(system, *certificate).valid) {
        throw std::logic_error("solver returned an invalid infeasibility certificate");
    }
    return *certificate;
}

std::vector<State> extreme_states(const EffectAlgebra& algebra) {
    const LinearSystem system = state_system(algebra);
    std::vector<State> states;
    for (auto x : algebra.elements()) {
        if (x == algebra.zero() || x == algebra.one()) continue;
        for (int direction : {1, -1}) {
            std::vector<Rational> objective(algebra.size());
            objective[x.index] = direction;
            auto point = maximize_exact(system, objective);
            if (!point) return {};
            State s{std::move(point->values)};
            if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(std::move(s));
        }
    }
    if (states.empty()) {
        if (auto found = find_state(algebra); auto* s = std::get_if<State>(&found)) states.push_back(*s);
    }
    return states;
}

std::string_view violation_label(StateViolationKind kind) {
    switch (kind) {
        case StateViolationKind::Domain: return "domain";
        case StateViolationKind::Bound: return "bound";
        case StateViolationKind::Zero: return "zero";
        case StateViolationKind::Unit: return "unit";
        case StateViolationKind::Additivity: return "additivity";
    }
    return "unknown";
}

StateReport verify_state(const EffectAlgebra& algebra, const std::vector<Rational>& candidate) {
    StateReport report;
    if (candidate.size() != algebra.size()) {
        report.violations.push_back({StateViolationKind::Domain, {},
                                     "expected " + std::to_string(algebra.size()) + " values, got " +
                                         std::to_string(candidate.size())});
        return report;
    }
    auto value = [&](ElementId x) -> const Rational& { return candidate[x.index]; };
    auto w = [&](ElementId x) { return "w(" + algebra.name(x) + ")"; };

    for (auto x : algebra.elements()) {
        if (value(x) < 0 || value(x) > 1) {
            report.violations.push_back(
                {StateViolationKind::Bound, {x}, w(x) + " = " + to_string(value(x)) + " lies outside [0, 1]"});
        }
    }
    if (value(algebra.zero()) != 0) {
        report.violations.push_back({StateViolationKind::Zero, {algebra.zero()},
                                     w(algebra.zero()) + " = " + to_string(value(algebra.zero()))});
    }
    if (value(algebra.one()) != 1) {
        report.violations.push_back({StateViolationKind::Unit, {algebra.one()},
                                     w(algebra.one()) + " = " + to_string(value(algebra.one()))});
    }
    for (auto x : algebra.elements()) {
        for (auto y : algebra.elements()) {
            if (y < x) continue;
            auto z = algebra.sum(x, y);
            if (!z) continue;
            const Rational total = value(x) + value(y);
            if (total != value(*z)) {
                report.violations.push_back({StateViolationKind::Additivity, {x, y, *z},
                                             w(x) + " + " + w(y) + " = " + to_string(total) + " but " + w(*z) +
                                                 " = " + to_string(value(*z))});
            }
        }
    }
    report.faithful = std::ranges::all_of(algebra.elements(), [&](ElementId x) {
        return x == algebra.zero() || value(x) != 0;
    });
    return report;
}

State restrict_to_sharp(const Analysis& analysis, const State& state) {
    const auto& sub = analysis.sharp_part();
    State out;
    out.values.reserve(sub.embedding.size());
    for (auto parent : sub.embedding) out.values.push_back(state[parent]);
    return out;
}

State smear_state(const Analysis& analysis, const State& sharp_state) {
    const auto& algebra = analysis.algebra();
    if (!analysis.is_lattice()) {
        throw PreconditionFailed("state smearing requires a lattice ordered effect algebra");
    }
    const auto& sub = analysis.sharp_part();
    if (auto report = verify_state(sub.algebra, sharp_state.values); !report.ok()) {
        throw InvalidState("not a state on the sharp elements: " + report.violations.front().detail);
    }
    auto sharp_value = [&](ElementId parent) -> const Rational& {
        auto local = sub.locate(parent);
        if (!local) throw std::logic_error(algebra.name(parent) + " was expected to be sharp");
        return sharp_state[*local];
    };

    std::vector<Rational> atom_value(algebra.size());
    for (auto a : analysis.profile().atoms) {
        const std::size_t n = analysis.ord(a);
        atom_value[a.index] = sharp_value(*multiple(algebra, a, n)) / n;
    }

    // Every sum is finite here, so the supremum over finite sub-families is the full sum.
    State smeared;
    smeared.values.resize(algebra.size());
    for (auto x : algebra.elements()) {
        if (x == algebra.zero()) continue;
        const auto basic = basic_decomposition(analysis, x);
        Rational total = sharp_value(basic.sharp_part);
        for (const auto& part : basic.meager_parts.parts) total += part.multiplicity * atom_value[part.atom.index];
        smeared.values[x.index] = total;
    }

    if (!verify_state(algebra, smeared.values).ok() || restrict_to_sharp(analysis, smeared) != sharp_state) {
        throw std::logic_error("smeared mapping is not a state extending the input");
    }
    return smeared;
}

}  // namespace effalg
