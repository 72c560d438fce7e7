#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ranges>
#include <vector>

namespace effalg {

/// Dense index of an element inside the carrier of one algebra.
struct ElementId {
    std::size_t index = 0;

    friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// All element ids 0..n-1 in index order.
inline auto element_range(std::size_t n) {
    return std::views::iota(std::size_t{0}, n) |
           std::views::transform([](std::size_t i) { return ElementId{i}; });
}

}  // namespace effalg

template <>
struct std::hash<effalg::ElementId> {
    std::size_t operator()(effalg::ElementId id) const noexcept {
        return std::hash<std::size_t>{}(id.index);
    }
};
