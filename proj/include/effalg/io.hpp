#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "effalg/algebra.hpp"
#include "effalg/document.hpp"
#include "effalg/rational.hpp"
#include "effalg/state.hpp"

namespace effalg {

/// Parses EAF v1:
///
///     ea v1
///     elements <n>
///     names <n tokens>
///     zero <name>
///     one <name>
///     sum <x> <y> = <z>      (zero or more)
///
/// `#` starts a comment; blank lines are ignored. Throws MissingHeader,
/// ParseError or UnknownName; nothing is returned for malformed input.
EafDocument parse_eaf(std::string_view text);

/// Canonical EAF text: names in index order, one line per defined sum with
/// x ≤ y by index and both nonzero, sorted by (x, y).
std::string serialize_eaf(const EffectAlgebra& algebra);

/// Convenience: parse_eaf followed by build_effect_algebra.
EffectAlgebra load_eaf(std::string_view text);

/// Parses STATE v1 (`state v1` then `value <name> <p/q>` per element of
/// `domain`) into a candidate mapping indexed like `domain`. The mapping is not
/// checked for additivity. Throws ParseError, UnknownName, MissingElement or
/// NegativeDenominator.
std::vector<Rational> parse_state(std::string_view text, const EffectAlgebra& domain);

/// Canonical STATE v1 text in element index order.
std::string serialize_state(const EffectAlgebra& domain, const State& state);

/// Whether `name` is usable as an element name in EAF and state files.
bool valid_element_name(std::string_view name);

}  // namespace effalg
