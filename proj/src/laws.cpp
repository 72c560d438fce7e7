#include "effalg/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "effalg/constructions.hpp"
#include "effalg/decomposition.hpp"
#include "effalg/state.hpp"

namespace effalg {

namespace {

struct Failure {
    std::vector<ElementId> witnesses;
    std::string detail;
};

using Outcome = std::optional<Failure>;

struct Context {
    const Analysis& analysis;
    const EffectAlgebra& algebra;
    const OrderStructure& order;
    const StructureProfile& profile;
    bool counterexample_mode;

    const std::string& name(ElementId x) const { return algebra.name(x); }
    ElementId zero() const { return algebra.zero(); }
};

// What a law assumes besides finiteness. Only the lattice assumption is waived
// in counterexample mode.
struct Needs {
    bool lattice = true;
    bool atomic = false;
    bool archimedean = false;
    bool sharply_dominating = false;
};

struct Law {
    std::string_view id;
    Needs needs;
    Outcome (*check)(const Context&);
};

std::string pair_text(const Context& c, std::string_view op, ElementId x, ElementId y) {
    return std::string(op) + "(" + c.name(x) + ", " + c.name(y) + ")";
}

Failure missing(const Context& c, std::string_view op, ElementId x, ElementId y) {
    return {{x, y}, pair_text(c, op, x, y) + " does not exist"};
}

std::optional<bool> maybe_compatible(const Context& c, ElementId x, ElementId y) {
    try {
        return compatible(c.algebra, c.order, x, y);
    } catch (const BoundsMissing&) {
        return std::nullopt;
    }
}

std::string family_text(const Context& c, const std::vector<AtomMultiple>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " + ";
        if (p.multiplicity != 1) out += std::to_string(p.multiplicity) + "*";
        out += c.name(p.atom);
    }
    return out;
}

struct Family {
    std::vector<AtomMultiple> parts;  // ascending atom index
    ElementId sum;
};

// Every ⊕-orthogonal family of distinct atoms with 1 ≤ k ≤ ord(a), or k < ord(a)
// when `below_ord` is set. The empty family is included.
std::vector<Family> orthogonal_families(const Context& c, bool below_ord) {
    const auto& atoms = c.profile.atoms;
    std::vector<std::size_t> cap;
    std::size_t count = 1;
    for (auto a : atoms) {
        cap.push_back(below_ord ? c.analysis.ord(a) - 1 : c.analysis.ord(a));
        count *= cap.back() + 1;
        if (count > 2'000'000) throw SizeLimit("too many atom families to enumerate");
    }
    std::vector<Family> out;
    std::vector<std::size_t> k(atoms.size(), 0);
    for (;;) {
        std::vector<AtomMultiple> parts;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (k[i] != 0) parts.push_back({atoms[i], k[i]});
        }
        if (auto s = family_sum(c.algebra, parts)) out.push_back({std::move(parts), *s});
        std::size_t i = 0;
        while (i < atoms.size() && k[i] == cap[i]) k[i++] = 0;
        if (i == atoms.size()) break;
        ++k[i];
    }
    return out;
}

Outcome orthogonal_sum_join_meet(const Context& c) {
    for (auto x : c.algebra.elements()) {
        for (auto y : c.algebra.elements()) {
            auto s = c.algebra.sum(x, y);
            if (!s) continue;
            auto j = c.order.join(x, y);
            if (!j) return missing(c, "join", x, y);
            auto m = c.order.meet(x, y);
            if (!m) return missing(c, "meet", x, y);
            auto rhs = c.algebra.sum(*j, *m);
            if (rhs != s) {
                return Failure{{x, y}, c.name(x) + " + " + c.name(y) + " = " + c.name(*s) + " but " +
                                           pair_text(c, "join", x, y) + " + " + pair_text(c, "meet", x, y) +
                                           (rhs ? " = " + c.name(*rhs) : " is undefined")};
            }
        }
    }
    return std::nullopt;
}

Outcome sum_distributes_over_join(const Context& c) {
    for (auto z : c.algebra.elements()) {
        for (auto x : c.algebra.elements()) {
            auto xz = c.algebra.sum(x, z);
            if (!xz) continue;
            for (auto y : c.algebra.elements()) {
                auto yz = c.algebra.sum(y, z);
                if (!yz) continue;
                auto j = c.order.join(x, y);
                if (!j) return missing(c, "join", x, y);
                auto rhs = c.order.join(*xz, *yz);
                if (!rhs) return missing(c, "join", *xz, *yz);
                auto lhs = c.algebra.sum(*j, z);
                if (lhs != rhs) {
                    return Failure{{x, y, z}, pair_text(c, "join", x, y) + " + " + c.name(z) +
                                                  (lhs ? " = " + c.name(*lhs) : " is undefined") + " but " +
                                                  pair_text(c, "join", *xz, *yz) + " = " + c.name(*rhs)};
                }
            }
        }
    }
    return std::nullopt;
}

Outcome disjoint_multiples(const Context& c) {
    for (auto x : c.algebra.elements()) {
        if (x == c.zero()) continue;
        for (auto y : c.algebra.elements()) {
            if (y == c.zero() || c.order.meet(x, y) != c.zero()) continue;
            for (std::size_t k = 1; k <= c.analysis.ord(x); ++k) {
                const ElementId kx = *multiple(c.algebra, x, k);
                for (std::size_t l = 1; l <= c.analysis.ord(y); ++l) {
                    const ElementId ly = *multiple(c.algebra, y, l);
                    auto s = c.algebra.sum(kx, ly);
                    if (!s) continue;
                    auto m = c.order.meet(kx, ly);
                    if (!m) return missing(c, "meet", kx, ly);
                    if (*m != c.zero()) {
                        return Failure{{x, y, kx, ly}, pair_text(c, "meet", kx, ly) + " = " + c.name(*m) + " although " +
                                                           pair_text(c, "meet", x, y) + " = 0"};
                    }
                    auto j = c.order.join(kx, ly);
                    if (!j) return missing(c, "join", kx, ly);
                    if (*j != *s) {
                        return Failure{{x, y, kx, ly}, pair_text(c, "join", kx, ly) + " = " + c.name(*j) + " but " +
                                                           c.name(kx) + " + " + c.name(ly) + " = " + c.name(*s)};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Outcome compatible_meet_distributes(const Context& c) {
    const std::size_t bound = std::max<std::size_t>(2, c.profile.atoms.size());
    for (auto x : c.algebra.elements()) {
        std::vector<ElementId> partners;
        for (auto y : c.algebra.elements()) {
            if (maybe_compatible(c, x, y).value_or(false)) partners.push_back(y);
        }
        std::vector<ElementId> chosen;
        Outcome failure;
        std::function<void(std::size_t)> visit = [&](std::size_t from) {
            if (failure) return;
            if (!chosen.empty()) {
                std::optional<ElementId> top = chosen.front();
                std::optional<ElementId> meets = c.order.meet(x, chosen.front());
                for (std::size_t i = 1; i < chosen.size() && top && meets; ++i) {
                    top = c.order.join(*top, chosen[i]);
                    auto m = c.order.meet(x, chosen[i]);
                    meets = m ? c.order.join(*meets, *m) : std::nullopt;
                }
                // Sets whose supremum is missing fall outside the hypothesis.
                if (top) {
                    auto lhs = c.order.meet(x, *top);
                    if (!lhs || !meets || *lhs != *meets) {
                        failure = Failure{{x, *top}, pair_text(c, "meet", x, *top) +
                                                         (lhs ? " = " + c.name(*lhs) : " does not exist") +
                                                         " but the join of the pairwise meets is " +
                                                         (meets ? c.name(*meets) : "undefined")};
                        return;
                    }
                    if (!maybe_compatible(c, x, *top).value_or(false)) {
                        failure = Failure{{x, *top}, c.name(x) + " is not compatible with the join " + c.name(*top)};
                        return;
                    }
                }
            }
            if (chosen.size() == bound) return;
            for (std::size_t i = from; i < partners.size(); ++i) {
                chosen.push_back(partners[i]);
                visit(i + 1);
                chosen.pop_back();
            }
        };
        visit(0);
        if (failure) return failure;
    }
    return std::nullopt;
}

Outcome atom_multiple_unsharp(const Context& c) {
    for (auto a : c.profile.atoms) {
        for (std::size_t k = 1; k < c.analysis.ord(a); ++k) {
            const ElementId ka = *multiple(c.algebra, a, k);
            if (c.profile.is_sharp(ka)) {
                return Failure{{a, ka}, c.name(ka) + " is sharp although " + std::to_string(k) + " < ord(" +
                                            c.name(a) + ") = " + std::to_string(c.analysis.ord(a))};
            }
        }
    }
    return std::nullopt;
}

Outcome atom_saturation_sharp(const Context& c) {
    for (auto a : c.profile.atoms) {
        const std::size_t n = c.analysis.ord(a);
        const ElementId na = *multiple(c.algebra, a, n);
        if (!c.profile.is_sharp(na)) {
            return Failure{{a, na}, "ord(" + c.name(a) + ") = " + std::to_string(n) + " but " + c.name(na) +
                                        " is not sharp"};
        }
        for (std::size_t k = 1; k < n; ++k) {
            const ElementId ka = *multiple(c.algebra, a, k);
            if (c.profile.is_sharp(ka)) {
                return Failure{{a, ka}, c.name(ka) + " is sharp with " + std::to_string(k) + " != ord(" +
                                            c.name(a) + ")"};
            }
        }
    }
    return std::nullopt;
}

Outcome atom_interval_multiples(const Context& c) {
    for (auto a : c.profile.atoms) {
        std::vector<ElementId> multiples;
        for (std::size_t k = 1; k <= c.analysis.ord(a); ++k) multiples.push_back(*multiple(c.algebra, a, k));
        for (auto ka : multiples) {
            for (auto x : c.algebra.elements()) {
                if (!c.algebra.leq(a, x) || !c.algebra.leq(x, ka)) continue;
                if (std::find(multiples.begin(), multiples.end(), x) == multiples.end()) {
                    return Failure{{a, x, ka}, c.name(a) + " <= " + c.name(x) + " <= " + c.name(ka) + " but " +
                                                   c.name(x) + " is not a multiple of " + c.name(a)};
                }
            }
        }
    }
    return std::nullopt;
}

Outcome atom_multiple_injective(const Context& c) {
    for (auto a : c.profile.atoms) {
        for (std::size_t k = 1; k < c.analysis.ord(a); ++k) {
            const ElementId ka = *multiple(c.algebra, a, k);
            for (auto b : c.profile.atoms) {
                for (std::size_t l = 1; l <= c.analysis.ord(b); ++l) {
                    if (*multiple(c.algebra, b, l) != ka || (a == b && k == l)) continue;
                    return Failure{{ka, a, b}, std::to_string(k) + "*" + c.name(a) + " = " + std::to_string(l) + "*" +
                                                   c.name(b) + " = " + c.name(ka) + " with " +
                                                   std::to_string(k) + " != ord(" + c.name(a) + ")"};
                }
            }
        }
    }
    return std::nullopt;
}

Outcome atomic_decomposition_law(const Context& c) {
    for (auto x : c.algebra.elements()) {
        if (x == c.zero()) continue;
        AtomicDecomposition d;
        try {
            d = atomic_decomposition(c.analysis, x);
        } catch (const NotDecomposable& e) {
            return Failure{{x}, e.what()};
        }
        if (family_sum(c.algebra, d.parts) != x) {
            return Failure{{x}, family_text(c, d.parts) + " does not sum to " + c.name(x)};
        }
        std::optional<ElementId> top = c.zero();
        for (const auto& p : d.parts) {
            const ElementId m = *multiple(c.algebra, p.atom, p.multiplicity);
            auto j = c.order.join(*top, m);
            if (!j) return missing(c, "join", *top, m);
            top = j;
        }
        if (*top != x) {
            return Failure{{x, *top}, "the join of " + family_text(c, d.parts) + " is " + c.name(*top) + ", not " +
                                          c.name(x)};
        }
        const bool all_full = std::all_of(d.parts.begin(), d.parts.end(), [&](const AtomMultiple& p) {
            return p.multiplicity == c.analysis.ord(p.atom);
        });
        if (all_full != c.profile.is_sharp(x)) {
            return Failure{{x}, c.name(x) + " = " + family_text(c, d.parts) + (all_full ? " uses" : " does not use") +
                                    " only full multiples but " + c.name(x) +
                                    (c.profile.is_sharp(x) ? " is sharp" : " is not sharp")};
        }
    }
    return std::nullopt;
}

Outcome atom_multiple_domination(const Context& c) {
    for (auto a : c.profile.atoms) {
        for (auto b : c.profile.atoms) {
            if (a == b) continue;
            const std::size_t nb = c.analysis.ord(b);
            for (std::size_t k = 1; k <= c.analysis.ord(a); ++k) {
                const ElementId ka = *multiple(c.algebra, a, k);
                for (std::size_t l = 1; l <= nb; ++l) {
                    const ElementId lb = *multiple(c.algebra, b, l);
                    if (!c.algebra.leq(ka, lb)) continue;
                    if (l < nb) {
                        return Failure{{a, b, ka, lb}, c.name(ka) + " <= " + c.name(lb) + " with " +
                                                           std::to_string(l) + " < ord(" + c.name(b) + ") but " +
                                                           c.name(a) + " != " + c.name(b)};
                    }
                    auto comp = maybe_compatible(c, a, b);
                    if (!comp) return Failure{{a, b}, "compatibility of " + c.name(a) + " and " + c.name(b) +
                                                          " is undefined"};
                    const ElementId na = *multiple(c.algebra, a, c.analysis.ord(a));
                    if (*comp || !c.algebra.leq(na, lb)) {
                        return Failure{{a, b, ka, lb}, c.name(ka) + " <= " + c.name(lb) + " but " +
                                                           (*comp ? c.name(a) + " and " + c.name(b) + " are compatible"
                                                                  : c.name(na) + " is not below " + c.name(lb))};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Outcome meager_decomposition_unique(const Context& c) {
    const auto strict = orthogonal_families(c, true);
    std::map<ElementId, const Family*> by_sum;
    for (const auto& f : strict) {
        auto [it, inserted] = by_sum.emplace(f.sum, &f);
        if (!inserted) {
            return Failure{{f.sum}, family_text(c, it->second->parts) + " and " + family_text(c, f.parts) +
                                        " both sum to " + c.name(f.sum)};
        }
    }
    // A sub-ord family can not share its sum with a family that uses different
    // atom multiples, full ones included.
    for (const auto& g : orthogonal_families(c, false)) {
        auto it = by_sum.find(g.sum);
        if (it == by_sum.end()) continue;
        for (const auto& part : it->second->parts) {
            if (std::find(g.parts.begin(), g.parts.end(), part) != g.parts.end()) continue;
            std::vector<ElementId> witnesses{g.sum, part.atom};
            std::string detail = family_text(c, it->second->parts) + " = " + family_text(c, g.parts) + " = " +
                                 c.name(g.sum);
            if (!g.parts.empty() && g.parts.front().atom != part.atom) {
                witnesses.push_back(g.parts.front().atom);
                detail += " with " + c.name(part.atom) + " != " + c.name(g.parts.front().atom);
            }
            return Failure{std::move(witnesses), std::move(detail)};
        }
    }
    return std::nullopt;
}

Outcome sharp_kernel_equivalence(const Context& c) {
    bool all_covers = true;
    bool all_kernels = true;
    bool all_unique = true;
    for (auto x : c.algebra.elements()) {
        const auto& bounds = c.profile.sharp_bounds[x.index];
        all_covers = all_covers && bounds.cover.has_value();
        all_kernels = all_kernels && bounds.kernel.has_value();
        std::vector<ElementId> candidates;
        for (auto v : c.profile.sharp) {
            auto rest = c.algebra.difference(x, v);
            if (rest && c.profile.is_meager(*rest)) candidates.push_back(v);
        }
        if (candidates.size() != 1) {
            all_unique = false;
        } else if (bounds.kernel && candidates.front() != *bounds.kernel) {
            return Failure{{x, candidates.front(), *bounds.kernel},
                           "the sharp part with meager remainder under " + c.name(x) + " is " +
                               c.name(candidates.front()) + " but the greatest sharp element below it is " +
                               c.name(*bounds.kernel)};
        }
    }
    if (all_covers != all_kernels || all_kernels != all_unique) {
        return Failure{{}, std::string("sharp covers ") + (all_covers ? "exist" : "are missing") +
                               ", sharp kernels " + (all_kernels ? "exist" : "are missing") +
                               ", meager remainders are " + (all_unique ? "unique" : "not unique")};
    }
    return std::nullopt;
}

Outcome basic_decomposition_law(const Context& c) {
    const bool premise = c.profile.flags.archimedean && c.profile.flags.sharply_dominating;
    const auto strict = orthogonal_families(c, true);
    bool conclusion = true;
    std::optional<ElementId> offender;
    for (auto x : c.algebra.elements()) {
        if (x == c.zero()) continue;
        std::vector<std::pair<ElementId, const Family*>> found;
        for (auto v : c.profile.sharp) {
            for (const auto& f : strict) {
                if (c.algebra.sum(v, f.sum) == x) found.emplace_back(v, &f);
            }
        }
        if (found.size() != 1) {
            conclusion = false;
            if (!offender) offender = x;
            continue;
        }
        if (!c.analysis.is_lattice()) continue;
        const auto basic = basic_decomposition(c.analysis, x);
        auto expected = basic.meager_parts.parts;
        std::sort(expected.begin(), expected.end());
        if (basic.sharp_part != found.front().first || expected != found.front().second->parts) {
            return Failure{{x}, "basic decomposition of " + c.name(x) + " is " + c.name(basic.sharp_part) + " + " +
                                    family_text(c, expected) + " but the only decomposition is " +
                                    c.name(found.front().first) + " + " +
                                    family_text(c, found.front().second->parts)};
        }
    }
    if (premise != conclusion) {
        std::vector<ElementId> witnesses;
        if (offender) witnesses.push_back(*offender);
        return Failure{std::move(witnesses),
                       std::string(premise ? "Archimedean and sharply dominating" : "not both Archimedean and "
                                                                                     "sharply dominating") +
                           (conclusion ? ", yet every element decomposes uniquely"
                                       : ", yet " + c.name(*offender) + " has no unique basic decomposition")};
    }
    return std::nullopt;
}

Outcome atom_sharp_cover(const Context& c) {
    for (auto a : c.profile.atoms) {
        const ElementId na = *multiple(c.algebra, a, c.analysis.ord(a));
        const auto cover = c.profile.sharp_bounds[a.index].cover;
        if (cover != na) {
            return Failure{{a, na}, "least sharp element above " + c.name(a) + " is " +
                                        (cover ? c.name(*cover) : std::string("missing")) + ", not " + c.name(na)};
        }
    }
    return std::nullopt;
}

Outcome decomposition_split(const Context& c) {
    for (const auto& g : orthogonal_families(c, false)) {
        if (g.parts.empty()) continue;
        const ElementId x = g.sum;
        const auto split = split_atomic_decomposition(c.analysis, {g.parts, c.analysis.is_lattice()});
        const auto kernel = c.profile.sharp_bounds[x.index].kernel;
        if (split.full_sum != kernel) {
            return Failure{{x, split.full_sum}, "full multiples of " + family_text(c, g.parts) + " sum to " +
                                                    c.name(split.full_sum) + " but the sharp kernel of " + c.name(x) +
                                                    " is " + (kernel ? c.name(*kernel) : std::string("missing"))};
        }
        if (c.algebra.sum(split.full_sum, split.partial_sum) != x || !c.profile.is_meager(split.partial_sum)) {
            return Failure{{x, split.partial_sum}, "remaining multiples of " + family_text(c, g.parts) + " sum to " +
                                                       c.name(split.partial_sum) + ", not a meager complement of " +
                                                       c.name(split.full_sum) + " in " + c.name(x)};
        }
    }
    return std::nullopt;
}

Outcome state_smearing(const Context& c) {
    const SubAlgebra* sharp = nullptr;
    try {
        sharp = &c.analysis.sharp_part();
    } catch (const PreconditionFailed& e) {
        return Failure{{}, e.what()};
    }
    for (const auto& omega : extreme_states(sharp->algebra)) {
        if (c.analysis.is_lattice()) {
            State smeared;
            try {
                smeared = smear_state(c.analysis, omega);
            } catch (const std::exception& e) {
                return Failure{sharp->embedding, e.what()};
            }
            if (!verify_state(c.algebra, smeared.values).ok() || restrict_to_sharp(c.analysis, smeared) != omega) {
                return Failure{sharp->embedding, "smeared mapping is not a state extending the given one"};
            }
            continue;
        }
        // Without lattice order there is no basic decomposition, so ask for any extension.
        LinearSystem system = state_system(c.algebra);
        for (std::size_t i = 0; i < sharp->embedding.size(); ++i) {
            const ElementId s = sharp->embedding[i];
            system.equalities.push_back({{{s.index, 1}}, omega.values[i], "sharp " + c.name(s)});
        }
        if (std::holds_alternative<InfeasibilityCertificate>(solve_exact(system))) {
            std::string values;
            for (std::size_t i = 0; i < sharp->embedding.size(); ++i) {
                values += (i ? ", " : "") + c.name(sharp->embedding[i]) + " -> " + to_string(omega.values[i]);
            }
            return Failure{sharp->embedding, "no state on the algebra extends {" + values + "}"};
        }
    }
    return std::nullopt;
}

Outcome sharp_subalgebra_law(const Context& c) {
    if (!c.profile.is_sharp(c.algebra.one())) return Failure{{c.algebra.one()}, "1 is not sharp"};
    for (auto x : c.algebra.elements()) {
        for (auto y : c.algebra.elements()) {
            auto z = c.algebra.sum(x, y);
            if (!z) continue;
            const int inside = c.profile.is_sharp(x) + c.profile.is_sharp(y) + c.profile.is_sharp(*z);
            if (inside == 2) {
                return Failure{{x, y, *z}, c.name(x) + " + " + c.name(y) + " = " + c.name(*z) +
                                               " has exactly two sharp terms"};
            }
        }
    }
    // Orthomodular law inside S(E): p ≤ q ⇒ q = p ∨ (q ∧ p').
    for (auto p : c.profile.sharp) {
        for (auto q : c.profile.sharp) {
            if (!c.algebra.leq(p, q)) continue;
            const ElementId pc = c.algebra.supplement(p);
            auto m = c.order.meet(q, pc);
            if (!m) return missing(c, "meet", q, pc);
            auto j = c.order.join(p, *m);
            if (!j) return missing(c, "join", p, *m);
            if (*j != q) {
                return Failure{{p, q}, c.name(p) + " <= " + c.name(q) + " but join(" + c.name(p) + ", " +
                                           pair_text(c, "meet", q, pc) + ") = " + c.name(*j)};
            }
        }
    }
    return std::nullopt;
}

Outcome sharp_full_sublattice(const Context& c) {
    for (auto p : c.profile.sharp) {
        for (auto q : c.profile.sharp) {
            for (auto [op, bound] : {std::pair{"meet", c.order.meet(p, q)}, std::pair{"join", c.order.join(p, q)}}) {
                if (!bound) return missing(c, op, p, q);
                if (!c.profile.is_sharp(*bound)) {
                    return Failure{{p, q, *bound}, pair_text(c, op, p, q) + " = " + c.name(*bound) + " is not sharp"};
                }
            }
        }
    }
    return std::nullopt;
}

Outcome product_closure(const Context& c) {
    const Analysis product(direct_product(c.algebra, mv_chain(2, "c")));
    const auto& flags = product.profile().flags;
    std::string lost;
    auto note = [&](bool kept, std::string_view label) {
        if (!kept) lost += (lost.empty() ? "" : ", ") + std::string(label);
    };
    note(product.is_lattice(), "lattice");
    note(flags.atomic, "atomic");
    note(flags.archimedean, "archimedean");
    note(flags.sharply_dominating, "sharply dominating");
    if (!lost.empty()) return Failure{{}, "product with a 2-chain is not " + lost};
    return std::nullopt;
}

const std::vector<Law>& suite() {
    static const std::vector<Law> laws{
        {"orthogonal-sum-join-meet", {}, orthogonal_sum_join_meet},
        {"sum-distributes-over-join", {}, sum_distributes_over_join},
        {"disjoint-multiples", {}, disjoint_multiples},
        {"compatible-meet-distributes", {}, compatible_meet_distributes},
        {"atom-multiple-unsharp", {true, true}, atom_multiple_unsharp},
        {"atom-saturation-sharp", {true, true}, atom_saturation_sharp},
        {"atom-interval-multiples", {true, true}, atom_interval_multiples},
        {"atom-multiple-injective", {true, true}, atom_multiple_injective},
        {"atomic-decomposition", {true, true, true}, atomic_decomposition_law},
        {"atom-multiple-domination", {}, atom_multiple_domination},
        {"meager-decomposition-unique", {}, meager_decomposition_unique},
        {"sharp-kernel-equivalence", {}, sharp_kernel_equivalence},
        {"basic-decomposition", {true, true}, basic_decomposition_law},
        {"atom-sharp-cover", {}, atom_sharp_cover},
        {"decomposition-split", {true, true, true, true}, decomposition_split},
        {"state-smearing", {true, true, true, true}, state_smearing},
        {"sharp-subalgebra", {}, sharp_subalgebra_law},
        {"sharp-full-sublattice", {}, sharp_full_sublattice},
        {"product-closure", {true, true, true, true}, product_closure},
    };
    return laws;
}

std::optional<std::string> unmet(const Context& c, const Needs& needs) {
    const auto& f = c.profile.flags;
    if (needs.lattice && !c.analysis.is_lattice() && !c.counterexample_mode) return "not lattice ordered";
    if (needs.atomic && !f.atomic) return "not atomic";
    if (needs.archimedean && !f.archimedean) return "not Archimedean";
    if (needs.sharply_dominating && !f.sharply_dominating) return "not sharply dominating";
    return std::nullopt;
}

}  // namespace

std::string_view status_label(LawStatus status) {
    switch (status) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        case LawStatus::Skipped: return "skipped";
    }
    return "unknown";
}

bool LawReport::ok() const {
    return std::none_of(results.begin(), results.end(),
                        [](const LawResult& r) { return r.status == LawStatus::Fail; });
}

const LawResult* LawReport::find(std::string_view law) const {
    auto it = std::find_if(results.begin(), results.end(), [&](const LawResult& r) { return r.law == law; });
    return it == results.end() ? nullptr : &*it;
}

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& law : suite()) out.emplace_back(law.id);
        return out;
    }();
    return ids;
}

LawReport run_law_suite(const Analysis& analysis, const LawOptions& options) {
    for (const auto& id : options.selection) {
        if (std::find(law_ids().begin(), law_ids().end(), id) == law_ids().end()) {
            throw Error("unknown law '" + id + "'");
        }
    }
    const Context context{analysis, analysis.algebra(), analysis.order(), analysis.profile(),
                          options.counterexample_mode};
    LawReport report;
    for (const auto& law : suite()) {
        const std::string id(law.id);
        if (!options.selection.empty() &&
            std::find(options.selection.begin(), options.selection.end(), id) == options.selection.end()) {
            continue;
        }
        LawResult result{id, LawStatus::Pass, {}, {}};
        if (auto reason = unmet(context, law.needs)) {
            result.status = LawStatus::Skipped;
            result.detail = *reason;
        } else if (auto failure = law.check(context)) {
            result.status = LawStatus::Fail;
            for (auto w : failure->witnesses) result.witnesses.push_back(analysis.name(w));
            result.detail = std::move(failure->detail);
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

}  // namespace effalg
