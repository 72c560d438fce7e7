#include "effalg/constructions.hpp"

#include <set>

#include "effalg/io.hpp"
#include "fixture_data.hpp"

namespace effalg {

EffectAlgebra mv_chain(std::size_t n, std::string_view generator) {
    if (n == 0) throw DegenerateAlgebra("a chain needs n >= 1");
    const std::string g(generator);
    if (!valid_element_name(g) || g == "0" || g == "1") {
        throw Error("invalid generator name '" + g + "'");
    }
    std::vector<std::string> names;
    names.push_back("0");
    for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? g : std::to_string(k) + g);
    names.push_back("1");

    SumTable table(n + 1, ElementId{0}, ElementId{n});
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t l = 0; k + l <= n; ++l) table.declare(ElementId{k}, ElementId{l}, ElementId{k + l});
    }
    return EffectAlgebra::from_table(table, std::move(names));
}

EffectAlgebra boolean_algebra(std::size_t k) {
    if (k == 0 || k > 6) {
        throw SizeLimit("boolean algebras are generated for 1 <= k <= 6, got " + std::to_string(k));
    }
    static constexpr std::string_view letters = "pqrstu";
    const std::size_t size = std::size_t{1} << k;
    const std::size_t full = size - 1;
    std::vector<std::string> names(size);
    for (std::size_t mask = 0; mask < size; ++mask) {
        if (mask == 0) {
            names[mask] = "0";
        } else if (mask == full) {
            names[mask] = "1";
        } else {
            for (std::size_t bit = 0; bit < k; ++bit) {
                if (mask & (std::size_t{1} << bit)) names[mask] += letters[bit];
            }
        }
    }
    SumTable table(size, ElementId{0}, ElementId{full});
    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
            if ((x & y) == 0) table.declare(ElementId{x}, ElementId{y}, ElementId{x | y});
        }
    }
    return EffectAlgebra::from_table(table, std::move(names));
}

EffectAlgebra horizontal_sum(std::span<const EffectAlgebra> parts) {
    if (parts.empty()) throw Error("horizontal sum of no blocks");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() < 3) {
            throw DegenerateBlock("block " + std::to_string(i + 1) + " has only " +
                                  std::to_string(parts[i].size()) + " elements");
        }
    }
    if (parts.size() == 1) return parts.front();

    bool disjoint = true;
    std::set<std::string> seen;
    const auto& first = parts.front();
    seen.insert(first.name(first.zero()));
    seen.insert(first.name(first.one()));
    for (const auto& part : parts) {
        for (auto x : part.elements()) {
            if (x == part.zero() || x == part.one()) continue;
            if (!seen.insert(part.name(x)).second) disjoint = false;
        }
    }

    // Layout: 0, the inner elements of each block in block order, then 1.
    std::size_t total = 2;
    for (const auto& part : parts) total += part.size() - 2;
    const ElementId glued_one{total - 1};
    std::vector<std::string> names{first.name(first.zero())};
    std::vector<std::vector<ElementId>> map(parts.size());
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const auto& part = parts[b];
        map[b].resize(part.size());
        for (auto x : part.elements()) {
            if (x == part.zero()) {
                map[b][x.index] = ElementId{0};
            } else if (x == part.one()) {
                map[b][x.index] = glued_one;
            } else {
                map[b][x.index] = ElementId{names.size()};
                names.push_back(disjoint ? part.name(x) : part.name(x) + "_" + std::to_string(b + 1));
            }
        }
    }
    names.push_back(first.name(first.one()));

    SumTable table(names.size(), ElementId{0}, glued_one);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const auto& part = parts[b];
        for (auto x : part.elements()) {
            for (auto y : part.elements()) {
                if (x == part.zero() || y == part.zero()) continue;
                if (auto z = part.sum(x, y)) table.declare(map[b][x.index], map[b][y.index], map[b][z->index]);
            }
        }
    }
    return EffectAlgebra::from_table(table, std::move(names));
}

EffectAlgebra direct_product(const EffectAlgebra& left, const EffectAlgebra& right) {
    const std::size_t n2 = right.size();
    auto pair = [n2](ElementId x, ElementId y) { return ElementId{x.index * n2 + y.index}; };

    std::vector<std::string> names;
    names.reserve(left.size() * n2);
    for (auto x : left.elements()) {
        for (auto y : right.elements()) names.push_back("(" + left.name(x) + "," + right.name(y) + ")");
    }
    SumTable table(names.size(), pair(left.zero(), right.zero()), pair(left.one(), right.one()));
    for (auto x1 : left.elements()) {
        for (auto y1 : left.elements()) {
            auto z1 = left.sum(x1, y1);
            if (!z1) continue;
            for (auto x2 : right.elements()) {
                for (auto y2 : right.elements()) {
                    if (auto z2 = right.sum(x2, y2)) table.declare(pair(x1, x2), pair(y1, y2), pair(*z1, *z2));
                }
            }
        }
    }
    return EffectAlgebra::from_table(table, std::move(names));
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"coinciding-multiples", "stateless"};
    return names;
}

std::string_view fixture_text(std::string_view name) {
    if (name == "coinciding-multiples") return fixture_data::coinciding_multiples;
    if (name == "stateless") return fixture_data::stateless;
    throw UnknownFixture("unknown fixture '" + std::string(name) + "'");
}

EffectAlgebra fixture(std::string_view name) { return load_eaf(fixture_text(name)); }

}  // namespace effalg
