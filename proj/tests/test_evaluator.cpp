#include <doctest.h>

#include "hardy/errors.hpp"
#include "hardy/evaluator.hpp"

using namespace hardy;

namespace {

std::string eval(const char* text) { return render(evaluate(text)); }

}  // namespace

TEST_CASE("evaluator functions") {
  CHECK(eval("intersect(vn(2,x1), zm(2,x1))") == "{{x1}}");
  CHECK(eval("munion(vn(3,x1))") == "{x1,{x1}}");
  CHECK(eval("card({})") == "0");
  CHECK(eval("card(vn(7, \xE2\x88\x85))") == "7");
  CHECK(eval("union(vn(3,x1), zm(3,x1))") == "{x1,{x1},{{x1}},{x1,{x1}}}");
  CHECK(eval("vn(0, {})") == "{}");
  CHECK(eval("zm(2, x)") == "{{x}}");
}

TEST_CASE("literals and nesting") {
  CHECK(eval("{x1,{x1}}") == "{x1,{x1}}");
  CHECK(eval("{munion(vn(3,a)), b}") == "{b,{a,{a}}}");
  CHECK(eval("x1") == "x1");
  CHECK(eval("\xE2\x88\x85") == "{}");
  CHECK(eval("  card ( { a , b } ) ") == "2");
}

TEST_CASE("type errors carry positions") {
  const auto offset_of = [](const char* text) {
    try {
      evaluate(text);
    } catch (const EvalError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("munion(x1)") == 7);
  CHECK(offset_of("union({}, card({}))") == 10);
  CHECK(offset_of("vn(x, x1)") == 3);
  CHECK(offset_of("vn(2, {a})") == 6);
  CHECK(offset_of("frob({})") == 0);
  CHECK(offset_of("card({}, {})") == 0);
  CHECK(offset_of("{card({})}") == 1);
  CHECK(offset_of("vn(5000, x)") == 3);
  CHECK(offset_of("vn(99999999999999999999999, x)") == 3);
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(evaluate("union({}"), ParseError);
  CHECK_THROWS_AS(evaluate(""), ParseError);
  CHECK_THROWS_AS(evaluate("{}{}"), ParseError);
  CHECK_THROWS_AS(evaluate("card(,)"), ParseError);
}
