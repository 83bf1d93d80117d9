#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "posmap/multipoly.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

// Text grammar (whitespace insignificant):
//   poly    := [sign] term { sign term }     sign := '+' | '-'
//   term    := coeff ['*'] { varpow } | varpow { varpow }
//   coeff   := int [ '/' posint ]
//   varpow  := var [ '^' posint ]            var := 'x' posint
// Example: "3/2 x1^2 x2 - x3^4 + 7".

/// Parses a polynomial in x1..xN. The ring is x1..x_nvars when nvars is given,
/// otherwise x1..x_k with k the largest index that appears (at least 1).
/// Throws ParseError with the offending column.
MultiPoly parse_multipoly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Parses a univariate polynomial; the variable may be written x or x1.
UniPoly parse_unipoly(std::string_view text);

/// Prints in the grammar above, lex-leading term first. Variables are printed
/// by name, so the output re-parses when the ring is x1..xN.
std::string to_string(const MultiPoly& p);

}  // namespace posmap
