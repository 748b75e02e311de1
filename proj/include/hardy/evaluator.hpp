#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "hardy/hfset.hpp"

namespace hardy {

using Value = std::variant<HfSet, std::uint64_t>;

/// Evaluates a set expression:
///   expr := set-literal | identifier | integer | fn '(' expr (',' expr)* ')'
///   fn   := union | intersect | munion | card | vn | zm
/// Set literals may contain nested expressions. vn(n, base) and zm(n, base)
/// take a numeral depth and a base that is an atom or the empty set.
/// Throws ParseError on syntax errors and EvalError on type errors.
Value evaluate(std::string_view expression);

/// Canonical set text, or the decimal number.
std::string render(const Value& v);

}  // namespace hardy
