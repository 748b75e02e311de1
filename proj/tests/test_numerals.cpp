#include <doctest.h>

#include "hardy/notation.hpp"
#include "hardy/numerals.hpp"
#include "oracle/naive_sets.hpp"

using namespace hardy;

namespace {

oracle::NaiveSet to_naive(const HfSet& s) {
  if (s.is_atom()) return oracle::NaiveSet::make_atom(s.as_atom().label());
  oracle::NaiveSet n;
  for (const auto& c : s.children()) n.elems.push_back(to_naive(c));
  return n;
}

const NumeralBase kEmpty = NumeralBase::empty_set();

}  // namespace

TEST_CASE("von Neumann numerals") {
  CHECK(print_set(von_neumann(3, kEmpty)) == "{{},{{}},{{},{{}}}}");
  const HfSet c3 = von_neumann(3, NumeralBase(Atom("x1")));
  CHECK(print_set(c3) == "{x1,{x1},{x1,{x1}}}");
  CHECK(c3.cardinality() == 3);
  CHECK(von_neumann(0, kEmpty).is_empty());
  CHECK(von_neumann(0, NumeralBase(Atom("x1"))) == HfSet::atom("x1"));
}

TEST_CASE("Zermelo numerals") {
  CHECK(print_set(zermelo(3, kEmpty)) == "{{{{}}}}");
  const HfSet d3 = zermelo(3, NumeralBase(Atom("x1")));
  CHECK(print_set(d3) == "{{{x1}}}");
  CHECK(d3.cardinality() == 1);
  CHECK(print_set(zermelo(1, kEmpty)) == "{{}}");
}

TEST_CASE("numeral() dispatches on the system") {
  CHECK(numeral({NumeralSystem::VonNeumann, 2, NumeralBase(Atom("y"))}) == parse_set("{y,{y}}"));
  CHECK(numeral({NumeralSystem::Zermelo, 2, NumeralBase(Atom("y"))}) == parse_set("{{y}}"));
}

TEST_CASE("constructors agree with the naive recurrences") {
  for (const std::optional<std::string> label : {std::optional<std::string>{}, std::optional<std::string>{"x1"}}) {
    const NumeralBase base = label ? NumeralBase(Atom(*label)) : kEmpty;
    for (int n = 0; n <= 8; ++n) {
      CHECK(oracle::same(to_naive(von_neumann(n, base)), oracle::vn(n, label)));
      CHECK(oracle::same(to_naive(zermelo(n, base)), oracle::zm(n, label)));
    }
  }
}

TEST_CASE("recurrence under monadic union, cardinalities, C/D intersections") {
  for (const NumeralBase& b : {kEmpty, NumeralBase(Atom("x1")), NumeralBase(Atom("q"))}) {
    CAPTURE(b.to_string());
    for (std::size_t n = 2; n <= 10; ++n) {
      CAPTURE(n);
      CHECK(monadic_union(von_neumann(n, b)) == von_neumann(n - 1, b));
      CHECK(monadic_union(zermelo(n, b)) == zermelo(n - 1, b));
    }
    for (std::size_t n = 1; n <= 10; ++n) {
      CHECK(von_neumann(n, b).cardinality() == n);
      CHECK(zermelo(n, b).cardinality() == 1);
    }
    CHECK(von_neumann(1, b) == zermelo(1, b));
    CHECK(von_neumann(2, b) != zermelo(2, b));
    CHECK(intersect(von_neumann(2, b), zermelo(2, b)) == zermelo(2, b));
    for (std::size_t n = 3; n <= 10; ++n) {
      CHECK(intersect(von_neumann(n, b), zermelo(n, b)).is_empty());
      // Value-level reading of the "apart from zero, unity and two" remark.
      CHECK(von_neumann(n, b) != zermelo(n, b));
    }
  }
  const NumeralBase x(Atom("x1"));
  CHECK(monadic_union(von_neumann(1, x)).is_empty());
  CHECK(monadic_union(zermelo(1, x)).is_empty());
}

TEST_CASE("cross-base disjointness") {
  const NumeralBase x(Atom("x")), y(Atom("y"));
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(intersect(von_neumann(n, x), von_neumann(n, y)).is_empty());
    CHECK(intersect(zermelo(n, x), zermelo(n, y)).is_empty());
  }
}
