#include "effalg/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace effalg {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens with comments stripped; blank lines dropped.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string token; in >> token;) line.tokens.push_back(std::move(token));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::size_t parse_count(const Line& line, const std::string& token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line.number, "expected a nonnegative integer, got '" + token + "'");
    }
    return value;
}

void expect_arity(const Line& line, std::size_t arity) {
    if (line.tokens.size() != arity) {
        throw ParseError(line.number, "'" + line.tokens.front() + "' expects " + std::to_string(arity - 1) +
                                          " argument(s)");
    }
}

}  // namespace

bool valid_element_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || u >= 0x7f || c == '#' || c == '=') return false;
    }
    return true;
}

EafDocument parse_eaf(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"ea", "v1"}) {
        throw MissingHeader(lines.empty() ? 0 : lines.front().number, "missing 'ea v1' header");
    }

    EafDocument doc;
    std::optional<std::size_t> declared_count;
    bool have_names = false;
    std::optional<Line> zero_line;
    std::optional<Line> one_line;
    std::unordered_set<std::string> known;

    auto require_known = [&](const Line& line, const std::string& name) {
        if (!known.contains(name)) throw UnknownName(line.number, "unknown element name '" + name + "'");
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& keyword = line.tokens.front();
        if (keyword == "elements") {
            expect_arity(line, 2);
            if (declared_count) throw ParseError(line.number, "'elements' given twice");
            declared_count = parse_count(line, line.tokens[1]);
        } else if (keyword == "names") {
            if (have_names) throw ParseError(line.number, "'names' given twice");
            if (!declared_count) throw ParseError(line.number, "'names' must follow 'elements'");
            if (line.tokens.size() - 1 != *declared_count) {
                throw ParseError(line.number, "expected " + std::to_string(*declared_count) + " names, got " +
                                                  std::to_string(line.tokens.size() - 1));
            }
            for (std::size_t t = 1; t < line.tokens.size(); ++t) {
                const auto& name = line.tokens[t];
                if (!valid_element_name(name)) throw ParseError(line.number, "invalid element name '" + name + "'");
                if (!known.insert(name).second) throw ParseError(line.number, "duplicate element name '" + name + "'");
                doc.names.push_back(name);
            }
            have_names = true;
        } else if (keyword == "zero" || keyword == "one") {
            expect_arity(line, 2);
            if (!have_names) throw ParseError(line.number, "'" + keyword + "' must follow 'names'");
            require_known(line, line.tokens[1]);
            auto& slot = keyword == "zero" ? zero_line : one_line;
            if (slot) throw ParseError(line.number, "'" + keyword + "' given twice");
            slot = line;
            (keyword == "zero" ? doc.zero : doc.one) = line.tokens[1];
        } else if (keyword == "sum") {
            if (line.tokens.size() != 5 || line.tokens[3] != "=") {
                throw ParseError(line.number, "expected 'sum <x> <y> = <z>'");
            }
            if (!have_names) throw ParseError(line.number, "'sum' must follow 'names'");
            for (std::size_t t : {1u, 2u, 4u}) require_known(line, line.tokens[t]);
            doc.sums.push_back({line.tokens[1], line.tokens[2], line.tokens[4], line.number});
        } else if (keyword == "ea") {
            throw ParseError(line.number, "repeated header");
        } else {
            throw ParseError(line.number, "unknown directive '" + keyword + "'");
        }
    }
    if (!declared_count) throw ParseError(0, "missing 'elements'");
    if (!have_names) throw ParseError(0, "missing 'names'");
    if (!zero_line) throw ParseError(0, "missing 'zero'");
    if (!one_line) throw ParseError(0, "missing 'one'");
    return doc;
}

EffectAlgebra load_eaf(std::string_view text) { return build_effect_algebra(parse_eaf(text)); }

std::string serialize_eaf(const EffectAlgebra& algebra) {
    std::ostringstream out;
    out << "ea v1\n";
    out << "elements " << algebra.size() << "\n";
    out << "names";
    for (const auto& name : algebra.names()) out << ' ' << name;
    out << "\nzero " << algebra.name(algebra.zero()) << "\n";
    out << "one " << algebra.name(algebra.one()) << "\n";
    for (auto x : algebra.elements()) {
        if (x == algebra.zero()) continue;
        for (auto y : algebra.elements()) {
            if (y < x || y == algebra.zero()) continue;
            if (auto z = algebra.sum(x, y)) {
                out << "sum " << algebra.name(x) << ' ' << algebra.name(y) << " = " << algebra.name(*z) << "\n";
            }
        }
    }
    return out.str();
}

std::vector<Rational> parse_state(std::string_view text, const EffectAlgebra& domain) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"state", "v1"}) {
        throw MissingHeader(lines.empty() ? 0 : lines.front().number, "missing 'state v1' header");
    }
    std::vector<std::optional<Rational>> values(domain.size());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.front() != "value") {
            throw ParseError(line.number, "unknown directive '" + line.tokens.front() + "'");
        }
        expect_arity(line, 3);
        auto id = domain.find(line.tokens[1]);
        if (!id) throw UnknownName(line.number, "unknown element name '" + line.tokens[1] + "'");
        if (values[id->index]) throw ParseError(line.number, "value for '" + line.tokens[1] + "' given twice");
        try {
            values[id->index] = parse_rational(line.tokens[2]);
        } catch (const NegativeDenominator& e) {
            throw NegativeDenominator(line.number, e.what());
        } catch (const ParseError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    std::vector<Rational> out;
    out.reserve(domain.size());
    for (auto x : domain.elements()) {
        if (!values[x.index]) throw MissingElement(0, "no value for element '" + domain.name(x) + "'");
        out.push_back(*values[x.index]);
    }
    return out;
}

std::string serialize_state(const EffectAlgebra& domain, const State& state) {
    if (state.values.size() != domain.size()) {
        throw InvalidState("state has " + std::to_string(state.values.size()) + " values for " +
                           std::to_string(domain.size()) + " elements");
    }
    std::ostringstream out;
    out << "state v1\n";
    for (auto x : domain.elements()) out << "value " << domain.name(x) << ' ' << to_string(state[x]) << "\n";
    return out.str();
}

}  // namespace effalg
