#include "effalg/structure.hpp"

#include <algorithm>

namespace effalg {

namespace {

std::vector<char> sharp_mask(const EffectAlgebra& algebra) {
    std::vector<char> mask(algebra.size(), 0);
    for (auto x : algebra.elements()) mask[x.index] = is_sharp(algebra, x) ? 1 : 0;
    return mask;
}

std::vector<ElementId> collect(const EffectAlgebra& algebra, const std::vector<char>& mask) {
    std::vector<ElementId> out;
    for (auto x : algebra.elements()) {
        if (mask[x.index]) out.push_back(x);
    }
    return out;
}

// Scans multiples x, 2x, ... . They strictly increase for x != 0, so a run longer
// than the carrier would mean an infinite isotropic index.
std::optional<std::size_t> bounded_ord(const EffectAlgebra& algebra, ElementId x) {
    std::size_t k = 1;
    ElementId current = x;
    while (auto next = algebra.sum(current, x)) {
        current = *next;
        if (++k > algebra.size()) return std::nullopt;
    }
    return k;
}

SharpBounds bounds_with(const EffectAlgebra& algebra, const OrderStructure& order,
                        const std::vector<ElementId>& sharp, ElementId x) {
    std::vector<ElementId> above;
    std::vector<ElementId> below;
    for (auto s : sharp) {
        if (algebra.leq(x, s)) above.push_back(s);
        if (algebra.leq(s, x)) below.push_back(s);
    }
    return {least(order, above), greatest(order, below)};
}

bool meager_with(const EffectAlgebra& algebra, const std::vector<ElementId>& sharp, ElementId x) {
    return std::none_of(sharp.begin(), sharp.end(),
                        [&](ElementId s) { return s != algebra.zero() && algebra.leq(s, x); });
}

}  // namespace

bool is_sharp(const EffectAlgebra& algebra, ElementId x) {
    const ElementId complement = algebra.supplement(x);
    for (auto z : algebra.elements()) {
        if (z == algebra.zero()) continue;
        if (algebra.leq(z, x) && algebra.leq(z, complement)) return false;
    }
    return true;
}

std::vector<ElementId> atoms(const EffectAlgebra& algebra) {
    std::vector<ElementId> out;
    for (auto a : algebra.elements()) {
        if (a == algebra.zero()) continue;
        bool minimal = true;
        for (auto b : algebra.elements()) {
            if (b != algebra.zero() && b != a && algebra.leq(b, a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<ElementId> sharp_elements(const EffectAlgebra& algebra) {
    return collect(algebra, sharp_mask(algebra));
}

std::size_t isotropic_index(const EffectAlgebra& algebra, ElementId x) {
    if (x == algebra.zero()) throw ZeroElement("isotropic index of the zero element is not finite");
    auto k = bounded_ord(algebra, x);
    if (!k) throw Error("multiples of " + algebra.name(x) + " do not terminate");
    return *k;
}

SharpBounds sharp_bounds(const EffectAlgebra& algebra, ElementId x) {
    return bounds_with(algebra, derive_order(algebra), sharp_elements(algebra), x);
}

bool is_sharply_dominating(const EffectAlgebra& algebra) {
    const auto order = derive_order(algebra);
    const auto sharp = sharp_elements(algebra);
    return std::ranges::all_of(algebra.elements(),
                       [&](ElementId x) { return bounds_with(algebra, order, sharp, x).cover.has_value(); });
}

std::vector<ElementId> meager_elements(const EffectAlgebra& algebra) {
    const auto sharp = sharp_elements(algebra);
    std::vector<ElementId> out;
    for (auto x : algebra.elements()) {
        if (meager_with(algebra, sharp, x)) out.push_back(x);
    }
    return out;
}

bool is_s_dominating(const EffectAlgebra& algebra, const OrderStructure& order) {
    if (!is_sharply_dominating(algebra)) return false;
    const auto sharp = sharp_elements(algebra);
    for (auto x : algebra.elements()) {
        for (auto p : sharp) {
            if (!order.meet(x, p)) return false;
        }
    }
    return true;
}

StructureProfile profile_structure(const EffectAlgebra& algebra, const OrderStructure& order) {
    const std::size_t n = algebra.size();
    StructureProfile p;
    p.sharp_mask_ = sharp_mask(algebra);
    p.sharp = collect(algebra, p.sharp_mask_);
    p.atoms = atoms(algebra);
    p.atom_mask_.assign(n, 0);
    for (auto a : p.atoms) p.atom_mask_[a.index] = 1;

    p.meager_mask_.assign(n, 0);
    for (auto x : algebra.elements()) p.meager_mask_[x.index] = meager_with(algebra, p.sharp, x) ? 1 : 0;
    p.meager = collect(algebra, p.meager_mask_);

    p.ord.assign(n, 0);
    bool archimedean = true;
    for (auto x : algebra.elements()) {
        if (x == algebra.zero()) continue;
        if (auto k = bounded_ord(algebra, x)) {
            p.ord[x.index] = *k;
        } else {
            archimedean = false;
        }
    }

    p.sharp_bounds.reserve(n);
    bool dominating = true;
    for (auto x : algebra.elements()) {
        p.sharp_bounds.push_back(bounds_with(algebra, order, p.sharp, x));
        if (!p.sharp_bounds.back().cover) dominating = false;
    }

    bool atomic = true;
    for (auto x : algebra.elements()) {
        if (x == algebra.zero()) continue;
        if (std::none_of(p.atoms.begin(), p.atoms.end(), [&](ElementId a) { return algebra.leq(a, x); })) {
            atomic = false;
        }
    }

    bool s_dominating = dominating;
    for (auto x : algebra.elements()) {
        for (auto s : p.sharp) {
            if (!order.meet(x, s)) s_dominating = false;
        }
    }

    p.flags = {atomic, archimedean, dominating, s_dominating};
    return p;
}

std::optional<ElementId> SubAlgebra::locate(ElementId parent) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), parent);
    if (it == embedding.end() || *it != parent) return std::nullopt;
    return ElementId{static_cast<std::size_t>(it - embedding.begin())};
}

SubAlgebra extract_subalgebra(const EffectAlgebra& algebra, const std::vector<ElementId>& members) {
    std::vector<ElementId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto position = [&](ElementId parent) -> std::optional<std::size_t> {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), parent);
        if (it == sorted.end() || *it != parent) return std::nullopt;
        return static_cast<std::size_t>(it - sorted.begin());
    };
    const auto zero = position(algebra.zero());
    const auto one = position(algebra.one());
    if (!zero || !one) throw Error("a subalgebra must contain zero and unit");

    SumTable table(sorted.size(), ElementId{*zero}, ElementId{*one});
    std::vector<std::string> names;
    names.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        names.push_back(algebra.name(sorted[i]));
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            auto z = algebra.sum(sorted[i], sorted[j]);
            if (!z) continue;
            if (auto k = position(*z)) table.declare(ElementId{i}, ElementId{j}, ElementId{*k});
        }
    }
    return SubAlgebra{EffectAlgebra::from_table(table, std::move(names)), std::move(sorted)};
}

SubAlgebra sharp_subalgebra(const EffectAlgebra& algebra) {
    return extract_subalgebra(algebra, sharp_elements(algebra));
}

}  // namespace effalg
