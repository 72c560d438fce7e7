#include "effalg/rational.hpp"

#include <cctype>

#include "effalg/errors.hpp"

namespace effalg {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer to_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

std::string to_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(to_integer(num));

    auto den = text.substr(slash + 1);
    if (!den.empty() && den.front() == '-' && is_integer_literal(den.substr(1), false)) {
        throw NegativeDenominator(0, "negative denominator in '" + std::string(text) + "'");
    }
    if (!is_integer_literal(den, false)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    Integer q = to_integer(den);
    if (q == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    return Rational(to_integer(num), q);
}

}  // namespace effalg
