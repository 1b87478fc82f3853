#pragma once

#include "kron/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kron {

/// Parse a polynomial expression.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := integer | integer '/' integer | name | '(' expr ')'
///
/// Whitespace is insignificant and juxtaposition is not multiplication.
/// With an explicit `variables` list, unknown names are rejected and the
/// result uses exactly that list; otherwise names are ordered by first
/// appearance.  Throws ParseError with the offending position.
MultiPoly parse_poly(std::string_view text,
                     const std::optional<std::vector<std::string>>& variables = std::nullopt);

}  // namespace kron
