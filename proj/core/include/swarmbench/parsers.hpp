#pragma once

#include "swarmbench/types.hpp"

#include <string>
#include <string_view>

namespace swarmbench {

// Strict reply grammars. A real literal is
//   [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
// and must be finite. Whitespace means space, tab, CR or LF.

/// ws* "(" ws* real ws* "," ws* real ws* ")" ws*
/// Throws ParseError carrying the raw text on any other input.
Vec2 parse_vec2(std::string_view raw);

/// Trimmed, case-insensitive "short" or "long".
PathChoice parse_path(std::string_view raw);

/// ws* "[" ws* real ws* "," ws* real ws* "]" ws*, both values >= 0; the
/// first is the short path.
PheromonePair parse_pheromones(std::string_view raw);

/// Fixed notation with at least three decimals, extended until the text
/// parses back to exactly `value`; shortest round-trip form when fixed
/// notation would need more than 17 decimals.
std::string format_reply_number(double value);

std::string format_vec2_reply(Vec2 v);
std::string format_path_reply(PathChoice choice);
std::string format_pheromone_reply(PheromonePair p);

} // namespace swarmbench
