#include "hardy/notation.hpp"

#include <vector>

#include "scanner.hpp"

namespace hardy {

namespace {

HfSet parse_elem(detail::Scanner& in);

HfSet parse_braced(detail::Scanner& in) {
  if (in.consume_empty_glyph()) return HfSet::empty();
  in.expect('{', "'{' or '\xE2\x88\x85'");
  std::vector<HfSet> children;
  if (in.consume('}')) return HfSet::empty();
  do {
    children.push_back(parse_elem(in));
  } while (in.consume(','));
  in.expect('}', "',' or '}'");
  return HfSet::set_of(std::move(children));
}

HfSet parse_elem(detail::Scanner& in) {
  if (in.at_identifier()) return HfSet(Atom(in.identifier()));
  if (in.consume_empty_glyph()) return HfSet::empty();
  if (in.peek() == '{') return parse_braced(in);
  in.fail("set or identifier");
}

void print_into(const HfSet& s, std::string& out) {
  if (s.is_atom()) {
    out += s.as_atom().label();
    return;
  }
  out += '{';
  bool first = true;
  for (const auto& child : s.children()) {
    if (!first) out += ',';
    first = false;
    print_into(child, out);
  }
  out += '}';
}

}  // namespace

HfSet parse_set(std::string_view text) {
  detail::Scanner in(text);
  HfSet result = parse_braced(in);
  if (!in.at_end()) in.fail("end of input");
  return result;
}

HfSet parse_element(std::string_view text) {
  detail::Scanner in(text);
  HfSet result = parse_elem(in);
  if (!in.at_end()) in.fail("end of input");
  return result;
}

std::string print_set(const HfSet& s) {
  std::string out;
  print_into(s, out);
  return out;
}

}  // namespace hardy
