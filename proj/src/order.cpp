#include "effalg/order.hpp"

namespace effalg {

std::optional<ElementId> greatest(const OrderStructure& order, const std::vector<ElementId>& candidates) {
    if (candidates.empty()) return std::nullopt;
    ElementId top = candidates.front();
    for (auto c : candidates) {
        if (order.leq(top, c)) top = c;
    }
    for (auto c : candidates) {
        if (!order.leq(c, top)) return std::nullopt;
    }
    return top;
}

std::optional<ElementId> least(const OrderStructure& order, const std::vector<ElementId>& candidates) {
    if (candidates.empty()) return std::nullopt;
    ElementId bottom = candidates.front();
    for (auto c : candidates) {
        if (order.leq(c, bottom)) bottom = c;
    }
    for (auto c : candidates) {
        if (!order.leq(bottom, c)) return std::nullopt;
    }
    return bottom;
}

OrderStructure derive_order(const EffectAlgebra& algebra) {
    const std::size_t n = algebra.size();
    OrderStructure order;
    order.n_ = n;
    order.leq_.assign(n * n, 0);
    order.meet_.assign(n * n, std::nullopt);
    order.join_.assign(n * n, std::nullopt);
    for (auto a : algebra.elements()) {
        for (auto b : algebra.elements()) {
            order.leq_[a.index * n + b.index] = algebra.leq(a, b) ? 1 : 0;
        }
    }

    bool lattice = true;
    std::vector<ElementId> lower;
    std::vector<ElementId> upper;
    for (auto x : algebra.elements()) {
        for (auto y : algebra.elements()) {
            if (y < x) {
                order.meet_[x.index * n + y.index] = order.meet_[y.index * n + x.index];
                order.join_[x.index * n + y.index] = order.join_[y.index * n + x.index];
                continue;
            }
            lower.clear();
            upper.clear();
            for (auto z : algebra.elements()) {
                if (order.leq(z, x) && order.leq(z, y)) lower.push_back(z);
                if (order.leq(x, z) && order.leq(y, z)) upper.push_back(z);
            }
            auto m = greatest(order, lower);
            auto j = least(order, upper);
            order.meet_[x.index * n + y.index] = m;
            order.join_[x.index * n + y.index] = j;
            if (!m || !j) lattice = false;
        }
    }
    order.lattice_ = lattice;

    bool mv = lattice;
    for (auto x : algebra.elements()) {
        if (!mv) break;
        for (auto y : algebra.elements()) {
            if (!compatible(algebra, order, x, y)) {
                mv = false;
                break;
            }
        }
    }
    order.mv_ = mv;
    return order;
}

Bounds compute_bounds(const OrderStructure& order, ElementId x, ElementId y) {
    return {order.meet(x, y), order.join(x, y)};
}

bool compatible(const EffectAlgebra& algebra, const OrderStructure& order, ElementId x, ElementId y) {
    const auto m = order.meet(x, y);
    const auto j = order.join(x, y);
    if (!m || !j) {
        throw BoundsMissing("meet or join of " + algebra.name(x) + " and " + algebra.name(y) +
                            " does not exist");
    }
    const auto rest = algebra.difference(y, *m);
    const auto s = rest ? algebra.sum(x, *rest) : std::nullopt;
    return s && *s == *j;
}

Classification classify(const EffectAlgebra& algebra, const OrderStructure& order) {
    Classification c;
    c.is_lattice = order.is_lattice();
    c.is_mv = order.is_mv();
    c.is_orthomodular_image = c.is_lattice;
    if (c.is_lattice) {
        for (auto x : algebra.elements()) {
            if (order.meet(x, algebra.supplement(x)) != algebra.zero()) {
                c.is_orthomodular_image = false;
                break;
            }
        }
    }
    return c;
}

}  // namespace effalg
