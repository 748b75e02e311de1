#pragma once

#include <string>
#include <string_view>

#include "hardy/hfset.hpp"

namespace hardy {

// Set-literal grammar (UTF-8, whitespace insignificant):
//   set  := '{' (elem (',' elem)*)? '}' | '∅'
//   elem := set | identifier
// identifier is a letter followed by letters, digits or underscores.

/// Parses a set literal. Throws ParseError with the byte offset on failure.
HfSet parse_set(std::string_view text);

/// Like parse_set but also accepts a bare atom label at top level.
HfSet parse_element(std::string_view text);

/// Canonical rendering: atoms first, no whitespace, "{}" for the empty set.
std::string print_set(const HfSet& s);

}  // namespace hardy
