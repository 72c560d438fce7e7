#include "effalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace effalg {

namespace {

void check_index(ElementId x, std::size_t size) {
    if (x.index >= size) {
        throw Error("element index " + std::to_string(x.index) + " out of range for carrier of size " +
                    std::to_string(size));
    }
}

class ReportBuilder {
  public:
    void add(Axiom axiom, std::vector<ElementId> witnesses, std::string detail) {
        auto& count = counts_[static_cast<std::size_t>(axiom)];
        ++count;
        if (count <= kMaxWitnessesPerAxiom) {
            report_.violations.push_back({axiom, std::move(witnesses), std::move(detail)});
        }
    }

    AxiomReport finish() && {
        for (std::size_t a = 0; a < counts_.size(); ++a) {
            if (counts_[a] <= kMaxWitnessesPerAxiom) continue;
            auto axiom = static_cast<Axiom>(a);
            auto last = std::find_if(report_.violations.rbegin(), report_.violations.rend(),
                                     [&](const auto& v) { return v.axiom == axiom; });
            last->detail += " (" + std::to_string(counts_[a] - kMaxWitnessesPerAxiom) +
                            " further violations omitted)";
        }
        return std::move(report_);
    }

  private:
    AxiomReport report_;
    std::array<std::size_t, 5> counts_{};
};

std::string idx(ElementId x) { return "#" + std::to_string(x.index); }

}  // namespace

SumTable::SumTable(std::size_t size, ElementId zero, ElementId one)
    : size_(size), zero_(zero), one_(one), entries_(size * size) {
    check_index(zero, size);
    check_index(one, size);
}

void SumTable::declare(ElementId x, ElementId y, ElementId z) {
    check_index(x, size_);
    check_index(y, size_);
    check_index(z, size_);
    auto& slot = entries_[x.index * size_ + y.index];
    if (slot && *slot != z) {
        throw DuplicateSum("sum " + idx(x) + " + " + idx(y) + " declared as both " + idx(*slot) +
                           " and " + idx(z));
    }
    slot = z;
}

std::optional<ElementId> SumTable::sum(ElementId x, ElementId y) const {
    check_index(x, size_);
    check_index(y, size_);
    return entries_[x.index * size_ + y.index];
}

SumTable SumTable::closed() const {
    SumTable out = *this;
    for (std::size_t x = 0; x < size_; ++x) {
        for (std::size_t y = 0; y < size_; ++y) {
            const auto& e = entries_[x * size_ + y];
            if (!e) continue;
            auto& mirror = out.entries_[y * size_ + x];
            if (!mirror) mirror = e;
        }
    }
    for (std::size_t x = 0; x < size_; ++x) {
        auto& left = out.entries_[zero_.index * size_ + x];
        auto& right = out.entries_[x * size_ + zero_.index];
        if (!left) left = ElementId{x};
        if (!right) right = ElementId{x};
    }
    return out;
}

std::string_view axiom_label(Axiom axiom) {
    switch (axiom) {
        case Axiom::Commutativity: return "commutativity";
        case Axiom::Associativity: return "associativity";
        case Axiom::Supplement: return "supplement";
        case Axiom::Unit: return "unit";
        case Axiom::Closure: return "closure";
    }
    return "unknown";
}

AxiomReport verify_axioms(const SumTable& table, std::span<const std::string> names) {
    auto label = [&](ElementId x) { return x.index < names.size() ? names[x.index] : idx(x); };
    const std::size_t n = table.size();
    const ElementId zero = table.zero();
    const ElementId one = table.one();
    ReportBuilder report;

    // Conflicts that closure cannot resolve are checked on the declared table.
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            auto a = table.sum(ElementId{x}, ElementId{y});
            auto b = table.sum(ElementId{y}, ElementId{x});
            if (a && b && *a != *b) {
                report.add(Axiom::Commutativity, {ElementId{x}, ElementId{y}},
                           label(ElementId{x}) + " + " + label(ElementId{y}) + " is " + label(*a) +
                               " but the reverse order gives " + label(*b));
            }
        }
        auto z = table.sum(zero, ElementId{x});
        auto w = table.sum(ElementId{x}, zero);
        for (const auto& r : {z, w}) {
            if (r && *r != ElementId{x}) {
                report.add(Axiom::Closure, {ElementId{x}, *r},
                           "zero + " + label(ElementId{x}) + " declared as " + label(*r));
                break;
            }
        }
    }

    const SumTable closed = table.closed();
    auto s = [&](std::optional<ElementId> a, std::optional<ElementId> b) -> std::optional<ElementId> {
        if (!a || !b) return std::nullopt;
        return closed.sum(*a, *b);
    };

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto xy = closed.sum(ElementId{x}, ElementId{y});
            for (std::size_t z = 0; z < n; ++z) {
                const auto yz = closed.sum(ElementId{y}, ElementId{z});
                if (!xy && !yz) continue;
                const auto left = s(xy, ElementId{z});
                const auto right = s(ElementId{x}, yz);
                if (left == right) continue;
                std::string detail = "(" + label(ElementId{x}) + " + " + label(ElementId{y}) + ") + " +
                                     label(ElementId{z}) + " is " + (left ? label(*left) : "undefined") +
                                     " but " + label(ElementId{x}) + " + (" + label(ElementId{y}) + " + " +
                                     label(ElementId{z}) + ") is " + (right ? label(*right) : "undefined");
                report.add(Axiom::Associativity, {ElementId{x}, ElementId{y}, ElementId{z}},
                           std::move(detail));
            }
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<ElementId> supplements;
        for (std::size_t y = 0; y < n; ++y) {
            if (closed.sum(ElementId{x}, ElementId{y}) == one) supplements.push_back(ElementId{y});
        }
        if (supplements.empty()) {
            report.add(Axiom::Supplement, {ElementId{x}}, label(ElementId{x}) + " has no supplement");
        } else if (supplements.size() > 1) {
            report.add(Axiom::Supplement, {ElementId{x}, supplements[0], supplements[1]},
                       label(ElementId{x}) + " has " + std::to_string(supplements.size()) + " supplements");
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        if (ElementId{a} == zero) continue;
        if (closed.sum(one, ElementId{a})) {
            report.add(Axiom::Unit, {one, ElementId{a}},
                       "unit + " + label(ElementId{a}) + " is defined for a nonzero element");
        }
    }
    return std::move(report).finish();
}

namespace {
std::string summarize(const AxiomReport& report) {
    std::string out = "effect algebra axioms violated:";
    for (const auto& v : report.violations) {
        out += " [";
        out += axiom_label(v.axiom);
        out += "] " + v.detail + ";";
    }
    return out;
}
}  // namespace

AxiomViolation::AxiomViolation(AxiomReport report) : Error(summarize(report)), report_(std::move(report)) {}

EffectAlgebra EffectAlgebra::from_table(const SumTable& table, std::vector<std::string> names) {
    const std::size_t n = table.size();
    if (names.size() != n) {
        throw Error("expected " + std::to_string(n) + " element names, got " + std::to_string(names.size()));
    }
    if (table.zero() == table.one()) {
        throw DegenerateAlgebra("zero and unit coincide");
    }
    AxiomReport report = verify_axioms(table, names);
    if (!report.ok()) throw AxiomViolation(std::move(report));

    const SumTable closed = table.closed();
    EffectAlgebra e;
    e.names_ = std::move(names);
    e.zero_ = table.zero();
    e.one_ = table.one();
    e.sums_.resize(n * n);
    e.differences_.resize(n * n);
    e.supplement_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            auto z = closed.sum(ElementId{x}, ElementId{y});
            e.sums_[x * n + y] = z;
            if (!z) continue;
            // Cancellativity makes the difference well defined.
            e.differences_[z->index * n + x] = ElementId{y};
            if (*z == e.one_) e.supplement_[x] = ElementId{y};
        }
    }
    return e;
}

std::optional<ElementId> EffectAlgebra::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return ElementId{static_cast<std::size_t>(it - names_.begin())};
}

SumTable EffectAlgebra::table() const {
    SumTable t(size(), zero_, one_);
    for (auto x : elements()) {
        for (auto y : elements()) {
            if (auto z = sum(x, y)) t.declare(x, y, *z);
        }
    }
    return t;
}

SumTable declared_table(const EafDocument& doc) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < doc.names.size(); ++i) index.emplace(doc.names[i], i);
    auto resolve = [&](const std::string& name, std::size_t line) {
        auto it = index.find(name);
        if (it == index.end()) throw UnknownName(line, "unknown element name '" + name + "'");
        return ElementId{it->second};
    };
    SumTable table(doc.names.size(), resolve(doc.zero, 0), resolve(doc.one, 0));
    for (const auto& s : doc.sums) {
        const auto x = resolve(s.left, s.line);
        const auto y = resolve(s.right, s.line);
        const auto z = resolve(s.result, s.line);
        try {
            table.declare(x, y, z);
        } catch (const DuplicateSum&) {
            throw DuplicateSum("sum " + s.left + " " + s.right + " declared twice with different results" +
                               (s.line ? " (line " + std::to_string(s.line) + ")" : std::string{}));
        }
    }
    return table;
}

EffectAlgebra build_effect_algebra(const EafDocument& doc) {
    return EffectAlgebra::from_table(declared_table(doc), doc.names);
}

std::optional<ElementId> partial_sum(const EffectAlgebra& algebra, ElementId x, ElementId y) {
    return algebra.sum(x, y);
}

std::optional<ElementId> partial_difference(const EffectAlgebra& algebra, ElementId b, ElementId a) {
    return algebra.difference(b, a);
}

std::optional<ElementId> multiple(const EffectAlgebra& algebra, ElementId x, std::size_t k) {
    ElementId acc = algebra.zero();
    for (std::size_t i = 0; i < k; ++i) {
        auto next = algebra.sum(acc, x);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

}  // namespace effalg
