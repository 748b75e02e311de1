#include <doctest.h>

#include <random>

#include "hardy/errors.hpp"
#include "hardy/hfset.hpp"
#include "hardy/notation.hpp"
#include "hardy/random_sets.hpp"
#include "oracle/naive_sets.hpp"

using namespace hardy;

namespace {

HfSet x1() { return HfSet::atom("x1"); }
HfSet brace(std::vector<HfSet> v) { return HfSet::set_of(std::move(v)); }
HfSet c2() { return brace({x1(), brace({x1()})}); }
HfSet d2() { return brace({brace({x1()})}); }
HfSet c3() { return brace({x1(), brace({x1()}), c2()}); }
HfSet d3() { return brace({d2()}); }

oracle::NaiveSet to_naive(const HfSet& s) {
  if (s.is_atom()) return oracle::NaiveSet::make_atom(s.as_atom().label());
  oracle::NaiveSet n;
  for (const auto& c : s.children()) n.elems.push_back(to_naive(c));
  return n;
}

}  // namespace

TEST_CASE("empty set") {
  CHECK(HfSet::empty().cardinality() == 0);
  CHECK(equals(HfSet::empty(), HfSet::set_of({})));
  CHECK(rank(HfSet::empty()) == 0);
  CHECK(print_set(HfSet::empty()) == "{}");
}

TEST_CASE("set_of deduplicates and orders") {
  const HfSet e = HfSet::empty();
  CHECK(brace({e, e}).cardinality() == 1);
  CHECK(brace({e, e}) == brace({e}));
  const HfSet s = brace({brace({e}), e});
  REQUIRE(s.cardinality() == 2);
  CHECK(s.children()[0] == e);
  CHECK(s.children()[1] == brace({e}));
  CHECK(print_set(brace({brace({x1()}), x1()})) == "{x1,{x1}}");
}

TEST_CASE("equality is extensional") {
  const HfSet e = HfSet::empty();
  CHECK(equals(brace({e, brace({e})}), brace({brace({e}), e})));
  CHECK_FALSE(equals(brace({brace({e})}), brace({e, brace({e})})));
  CHECK_FALSE(equals(x1(), brace({x1()})));
  CHECK(HfSet::atom("x1") == x1());
  CHECK(HfSet::atom("x2") != x1());
}

TEST_CASE("membership") {
  CHECK(member(brace({x1()}), c2()));
  CHECK_FALSE(member(HfSet::empty(), x1()));
  CHECK_FALSE(member(x1(), x1()));
  CHECK_FALSE(member(brace({brace({x1()})}), c3()));
  CHECK(member(x1(), c3()));
}

TEST_CASE("unite") {
  CHECK(unite(HfSet::empty(), c3()) == c3());
  CHECK(unite(c3(), d3()).cardinality() == 4);
  CHECK(unite(c2(), d2()) == c2());
  CHECK_THROWS_AS(unite(x1(), c2()), AtomOperand);
  CHECK_THROWS_AS(unite(c2(), x1()), AtomOperand);
}

TEST_CASE("intersect") {
  CHECK(intersect(c2(), d2()) == d2());
  CHECK(intersect(c3(), HfSet::empty()).is_empty());
  const HfSet e = HfSet::empty();
  const HfSet c3e = brace({e, brace({e}), brace({e, brace({e})})});
  const HfSet d3e = brace({brace({brace({e})})});
  CHECK(intersect(c3e, d3e).is_empty());
  CHECK_THROWS_AS(intersect(x1(), c2()), AtomOperand);
}

TEST_CASE("cardinality and rank") {
  CHECK(cardinality(c3()) == 3);
  CHECK(cardinality(d3()) == 1);
  CHECK(cardinality(HfSet::empty()) == 0);
  CHECK_THROWS_AS(cardinality(x1()), AtomOperand);
  CHECK(rank(d3()) == 3);
  CHECK(rank(c3()) == 3);
  CHECK(rank(x1()) == 0);
}

TEST_CASE("monadic union") {
  CHECK(monadic_union(c3()) == c2());
  CHECK(monadic_union(d3()) == d2());
  CHECK(monadic_union(brace({x1()})).is_empty());
  CHECK_THROWS_AS(monadic_union(x1()), AtomOperand);
}

TEST_CASE("parse_set") {
  CHECK(parse_set("{}") == HfSet::empty());
  CHECK(parse_set("\xE2\x88\x85") == HfSet::empty());
  CHECK(parse_set("{\xE2\x88\x85, {\xE2\x88\x85}}") == parse_set("{{},{{}}}"));
  CHECK(parse_set("{x1,{x1}}") == c2());
  CHECK(parse_set("{{x1},x1}") == c2());
  CHECK(parse_set("  { { x1 } , x1 }  ") == c2());
  CHECK(parse_set("{a_1,B2}").cardinality() == 2);
}

TEST_CASE("parse errors report offset and expectation") {
  const auto offset_of = [](const char* text) {
    try {
      parse_set(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x1") == 0);
  CHECK(offset_of("{x1") == 3);
  CHECK(offset_of("{x1,}") == 4);
  CHECK(offset_of("{1}") == 1);
  CHECK(offset_of("{x1}}") == 4);
  CHECK(offset_of("{_x}") == 1);
  try {
    parse_set("{x1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected() == "',' or '}'");
  }
}

TEST_CASE("parse_element accepts bare atoms") {
  CHECK(parse_element("x1") == x1());
  CHECK(parse_element("{x1}") == brace({x1()}));
}

TEST_CASE("print_set") {
  CHECK(print_set(c2()) == "{x1,{x1}}");
  CHECK(print_set(d3()) == "{{{x1}}}");
  CHECK(print_set(c3()) == "{x1,{x1},{x1,{x1}}}");
  CHECK(print_set(parse_set("{b,a,{},{c},{a,b}}")) == "{a,b,{},{c},{a,b}}");
}

TEST_CASE("atom labels are validated") {
  CHECK_THROWS_AS(Atom(""), Error);
  CHECK_THROWS_AS(Atom("1x"), Error);
  CHECK_THROWS_AS(Atom("x-1"), Error);
  CHECK_NOTHROW(Atom("x_1"));
}

TEST_CASE("total order: atoms first, then cardinality, then children") {
  const HfSet e = HfSet::empty();
  CHECK(x1() < e);
  CHECK(HfSet::atom("a") < HfSet::atom("b"));
  CHECK(e < brace({x1()}));
  CHECK(brace({x1()}) < brace({e}));
  CHECK(brace({e, brace({e})}) > brace({brace({brace({e})})}));
}

TEST_CASE("property: canonical form agrees with the naive oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const HfSet a = random_set(rng);
    const HfSet b = random_set(rng);
    const auto na = to_naive(a);
    const auto nb = to_naive(b);
    CHECK(HfSet::set_of({a.children().begin(), a.children().end()}) == a);
    CHECK((a == b) == oracle::same(na, nb));
    CHECK(oracle::same(to_naive(unite(a, b)), oracle::join(na, nb)));
    CHECK(oracle::same(to_naive(intersect(a, b)), oracle::meet(na, nb)));
    CHECK(oracle::same(to_naive(monadic_union(a)), oracle::big_union(na)));
    CHECK(a.cardinality() == oracle::size(na));
    CHECK(static_cast<int>(a.rank()) == oracle::depth_of(na));
    for (const auto& child : b.children()) {
      CHECK(member(child, a) == oracle::contains(na, to_naive(child)));
    }
    CHECK(parse_set(print_set(a)) == a);
  }
}

TEST_CASE("property: shuffled and duplicated children give the same value") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const HfSet a = random_set(rng);
    std::vector<HfSet> kids(a.children().begin(), a.children().end());
    const auto n = kids.size();
    for (std::size_t k = 0; k < n; ++k) kids.push_back(kids[k]);
    std::shuffle(kids.begin(), kids.end(), rng);
    CHECK(HfSet::set_of(kids) == a);
  }
}

TEST_CASE("property: order is a strict total order") {
  std::mt19937_64 rng(3);
  std::vector<HfSet> sets;
  for (int i = 0; i < 60; ++i) sets.push_back(random_set(rng, {3, 3, {"a", "b"}}));
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      const bool lt = a < b, gt = a > b, eq = a == b;
      CHECK(int(lt) + int(gt) + int(eq) == 1);
      for (const auto& c : sets) {
        if (a < b && b < c) CHECK(a < c);
      }
    }
  }
}
