#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hardy/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hardy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reproduce, machine format") {
  const Outcome o = run({"reproduce", "--format", "machine"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["probability"] == "1/16");
  CHECK(j["omega_size"] == 16);
  CHECK(j["field_size_log2"] == 16);
  CHECK(j["c_d_disjoint"] == true);
  CHECK(j["agreement"] == true);
  CHECK(j["atoms"] == nlohmann::json::array({"x1", "x2", "x3", "x4"}));
  CHECK(j["annihilated_a"] == "{x1,{x1}}");
  CHECK(j["annihilated_b"] == "{{x1}}");
  CHECK(j["joint_set"] == "{{x1}}");
  CHECK(j["axiom_report"]["complement_closure"]["checked_count"] == 65536);
  CHECK(j["axiom_report"]["all_pass"] == true);
  CHECK(std::abs(j["quantum"]["p_dd"].get<double>() - 0.0625) <= 1e-12);
  CHECK(std::abs(j["quantum"]["p_gamma"].get<double>() - 0.25) <= 1e-12);
}

TEST_CASE("reproduce reports are byte-identical across runs") {
  CHECK(run({"reproduce", "--format", "machine"}).out == run({"reproduce", "--format", "machine"}).out);
  CHECK(run({"reproduce"}).out == run({"reproduce"}).out);
}

TEST_CASE("reproduce text format") {
  const Outcome o = run({"reproduce"});
  CHECK(o.code == 0);
  CHECK(o.out.find("P(intersection)  1/16") != std::string::npos);
  CHECK(o.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("reproduce at depth 4 reports zero without failing") {
  const Outcome o = run({"reproduce", "--depth", "4", "--format", "machine"});
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["probability"] == "0/1");
  CHECK(j["agreement"] == false);
  CHECK(j["omega_size"] == 20);
}

TEST_CASE("reproduce at a depth beyond the exhaustive limit skips the axioms") {
  const Outcome o = run({"reproduce", "--depth", "6", "--format", "machine"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["axiom_report"].is_null());
}

TEST_CASE("reproduce usage errors") {
  const Outcome dup = run({"reproduce", "--atoms", "x1,x2,x1,x4"});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("NonDistinctAtoms") != std::string::npos);
  CHECK(dup.err.find("x1 and x3") != std::string::npos);
  CHECK(run({"reproduce", "--atoms", "a,b,c"}).code == 2);
  CHECK(run({"reproduce", "--atoms", "a,b,c,9z"}).code == 2);
  CHECK(run({"reproduce", "--depth", "0"}).code == 2);
  CHECK(run({"reproduce", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("reproduce with custom atoms") {
  const Outcome o = run({"reproduce", "--atoms", "p,q,r,s", "--format", "machine"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["joint_set"] == "{{p}}");
}

TEST_CASE("eval") {
  CHECK(run({"eval", "intersect(vn(2,x1), zm(2,x1))"}).out == "{{x1}}\n");
  CHECK(run({"eval", "munion(vn(3,x1))"}).out == "{x1,{x1}}\n");
  CHECK(run({"eval", "card({})"}).out == "0\n");
  const Outcome bad = run({"eval", "munion(x1)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("byte 7") != std::string::npos);
  CHECK(run({"eval", "{x1"}).code == 2);
}

TEST_CASE("check") {
  const Outcome all = run({"check", "--seed", "42", "--trials", "1000"});
  CHECK(all.code == 0);
  CHECK(all.out.find("[FAIL]") == std::string::npos);

  const Outcome dist = run({"check", "--suite", "distinctness"});
  CHECK(dist.code == 0);
  CHECK(dist.out.find("(a,b,a,d) -- EXPECTED-NONDISJOINT") != std::string::npos);

  const Outcome q = run({"check", "--suite", "quantum"});
  CHECK(q.code == 0);
  CHECK(q.out.find("p(d_e,d_p) = 0.0625") != std::string::npos);

  CHECK(run({"check", "--suite", "nope"}).code == 2);
  CHECK(run({"check", "--seed", "1", "--trials", "50"}).out == run({"check", "--seed", "1", "--trials", "50"}).out);
}

TEST_CASE("quantum") {
  const Outcome o = run({"quantum", "--format", "machine"});
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(std::abs(j["p_dd"].get<double>() - 0.0625) <= 1e-12);
  CHECK(std::abs(j["total"].get<double>() - 1.0) <= 1e-12);
  CHECK(run({"quantum"}).out.find("p(d,d)") != std::string::npos);
}

TEST_CASE("numerals") {
  CHECK(run({"numerals", "--system", "vn", "--n", "3", "--base", "x1"}).out == "{x1,{x1},{x1,{x1}}}\n");
  CHECK(run({"numerals", "--system", "zm", "--n", "3"}).out == "{{{{}}}}\n");
  CHECK(run({"numerals", "--system", "zm", "--n", "2", "--base", "{}"}).out == "{{{}}}\n");
  CHECK(run({"numerals", "--system", "vn", "--n", "2", "--base", "\xE2\x88\x85"}).out == "{{},{{}}}\n");
  CHECK(run({"numerals", "--system", "xx", "--n", "2"}).code == 2);
  CHECK(run({"numerals", "--system", "vn", "--n", "2", "--base", "1a"}).code == 2);
}
