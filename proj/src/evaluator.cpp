#include "hardy/evaluator.hpp"

#include <charconv>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/notation.hpp"
#include "hardy/numerals.hpp"
#include "scanner.hpp"

namespace hardy {

namespace {

constexpr std::uint64_t kMaxNumeralDepth = 4096;

struct Located {
  Value value;
  std::size_t offset;
};

class Evaluator {
 public:
  explicit Evaluator(std::string_view text) : in_(text) {}

  Value run() {
    Value v = expr().value;
    if (!in_.at_end()) in_.fail("end of input");
    return v;
  }

 private:
  Located expr() {
    const std::size_t start = in_.mark();
    if (in_.consume_empty_glyph()) return {HfSet::empty(), start};
    if (in_.peek() == '{') return {set_literal(), start};
    if (in_.at_digit()) return {number(), start};
    if (!in_.at_identifier()) in_.fail("expression");
    std::string name = in_.identifier();
    if (!in_.consume('(')) return {HfSet(Atom(std::move(name))), start};
    std::vector<Located> args;
    if (in_.peek() != ')') {
      do {
        args.push_back(expr());
      } while (in_.consume(','));
    }
    in_.expect(')', "',' or ')'");
    return {call(name, args, start), start};
  }

  HfSet set_literal() {
    in_.expect('{', "'{'");
    std::vector<HfSet> children;
    if (!in_.consume('}')) {
      do {
        const Located item = expr();
        children.push_back(as_element(item));
      } while (in_.consume(','));
      in_.expect('}', "',' or '}'");
    }
    return HfSet::set_of(std::move(children));
  }

  std::uint64_t number() {
    const std::size_t start = in_.mark();
    const std::string text = in_.digits();
    std::uint64_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw EvalError(start, "integer out of range: " + text);
    }
    return n;
  }

  static HfSet as_element(const Located& v) {
    if (const auto* s = std::get_if<HfSet>(&v.value)) return *s;
    throw EvalError(v.offset, "expected a set or atom, found the number " + render(v.value));
  }

  static HfSet as_set(const Located& v, const std::string& fn) {
    HfSet s = as_element(v);
    if (s.is_atom()) {
      throw EvalError(v.offset, fn + ": operand '" + print_set(s) + "' is an atom, expected a set");
    }
    return s;
  }

  static std::uint64_t as_depth(const Located& v, const std::string& fn) {
    const auto* n = std::get_if<std::uint64_t>(&v.value);
    if (n == nullptr) throw EvalError(v.offset, fn + ": expected a numeral depth, found " + render(v.value));
    if (*n > kMaxNumeralDepth) {
      throw EvalError(v.offset, fn + ": depth " + std::to_string(*n) + " exceeds " +
                                    std::to_string(kMaxNumeralDepth));
    }
    return *n;
  }

  static NumeralBase as_base(const Located& v, const std::string& fn) {
    const HfSet s = as_element(v);
    if (s.is_atom()) return NumeralBase(s.as_atom());
    if (s.is_empty()) return NumeralBase::empty_set();
    throw EvalError(v.offset, fn + ": base must be an atom or the empty set, found " + print_set(s));
  }

  static Value call(const std::string& name, const std::vector<Located>& args, std::size_t at) {
    const auto arity = [&](std::size_t n) {
      if (args.size() != n) {
        throw EvalError(at, name + " takes " + std::to_string(n) + " argument(s), got " +
                                std::to_string(args.size()));
      }
    };
    if (name == "union") {
      arity(2);
      return unite(as_set(args[0], name), as_set(args[1], name));
    }
    if (name == "intersect") {
      arity(2);
      return intersect(as_set(args[0], name), as_set(args[1], name));
    }
    if (name == "munion") {
      arity(1);
      return monadic_union(as_set(args[0], name));
    }
    if (name == "card") {
      arity(1);
      return static_cast<std::uint64_t>(as_set(args[0], name).cardinality());
    }
    if (name == "vn") {
      arity(2);
      return von_neumann(as_depth(args[0], name), as_base(args[1], name));
    }
    if (name == "zm") {
      arity(2);
      return zermelo(as_depth(args[0], name), as_base(args[1], name));
    }
    throw EvalError(at, "unknown function '" + name + "'");
  }

  detail::Scanner in_;
};

}  // namespace

Value evaluate(std::string_view expression) { return Evaluator(expression).run(); }

std::string render(const Value& v) {
  if (const auto* n = std::get_if<std::uint64_t>(&v)) return std::to_string(*n);
  return print_set(std::get<HfSet>(v));
}

}  // namespace hardy
