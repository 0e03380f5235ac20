#pragma once

#include <optional>
#include <set>
#include <string>

#include "addchow/projective.hpp"

namespace addchow {

// Parse arithmetic expressions over Q with identifiers as variables:
// +, -, *, /, ^ (nonnegative integer powers), parentheses.
// When `allowed` is given, any other identifier is a ParseError.
RatFunc parse_ratfunc(const std::string& text,
                      const std::optional<std::set<std::string>>& allowed = std::nullopt);

// As parse_ratfunc, plus the literal "inf" for the point at infinity.
ProjValue parse_proj(const std::string& text,
                     const std::optional<std::set<std::string>>& allowed = std::nullopt);

} // namespace addchow
