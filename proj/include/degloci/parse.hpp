#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degloci/poly.hpp"

namespace degloci {

/// Parses polynomial text in `ring`.
///
/// Grammar: identifiers [a-zA-Z_][a-zA-Z0-9_]*, rational literals n or n/d,
/// binary + - *, unary -, ^ with a non-negative integer exponent (the
/// ring's Laurent parameter also accepts t^-k), parentheses. `*` is
/// mandatory. An optional single '=' is read as lhs - rhs.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Identifiers appearing in the given texts, in order of first appearance.
std::vector<std::string> collect_identifiers(const std::vector<std::string>& texts);

}  // namespace degloci
