#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "detconv/error.hpp"
#include "detconv/io.hpp"
#include "detconv/verify.hpp"
#include "helpers.hpp"

using namespace testing;
using detconv::io::json;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("rational and polynomial round trips") {
  CHECK(io::to_json(q(-3, 6)) == "-1/2");
  CHECK(io::rational_from_json(json(4), "r") == 4);
  CHECK(io::rational_from_json(json("6/4"), "r") == q(3, 2));
  const MultiPoly p = Rational(3) * var(2, 0) * var(2, 1) - cst(2, q(1, 2));
  CHECK(io::poly_from_json(io::to_json(p), "p") == p);
  CHECK(io::poly_from_json(json("x^2-1"), "p") == uni("x^2-1"));
  CHECK(io::poly_from_json(json(5), "p") == cst(1, 5));
}

TEST_CASE("matrix round trips") {
  const RationalMatrix m{{1, q(2, 3)}, {-4, 0}};
  CHECK(io::rational_matrix_from_json(io::to_json(m), "m") == m);
  CHECK(io::rational_matrix_from_json(json::parse(R"([[1, "2/3"], [-4, 0]])"), "m") == m);
  const PolyMatrix pm(m, 2);
  CHECK(io::poly_matrix_from_json(io::to_json(pm), "m", 2) == pm);
}

TEST_CASE("parse errors name the offending field") {
  const json bad = json::parse(R"({"a1": [[1, 2], [3, "x/y"]], "a2": [[1, 2]]})");
  const std::string msg = message_of([&] { io::gsvcp_instance_from_json(bad, "input"); });
  CHECK(msg.find("a1") != std::string::npos);
  CHECK(msg.find("[1][1]") != std::string::npos);
  CHECK_THROWS_AS(io::gsvcp_instance_from_json(bad, "input"), InputError);

  const json missing = json::parse(R"({"a": [[1, 2]]})");
  CHECK(message_of([&] { io::rank_decomposition_from_json(missing, "dec"); }).find("dec.b") != std::string::npos);
  CHECK_THROWS_AS(io::rational_matrix_from_json(json::parse("[[1, 2], [3]]"), "m"), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json("1/0"), "r"), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/input.json"), InputError);
}

TEST_CASE("run config validation") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.sample_count = 0;
  CHECK_THROWS_AS(validate(c), InputError);
  c = RunConfig{};
  c.output_format = "xml";
  CHECK_THROWS_AS(validate(c), InputError);
  CHECK(parse_fault("local-l2") == Fault::LocalL2);
  CHECK_THROWS_AS(parse_fault("nope"), InputError);
}

TEST_CASE("verify suites pass and produce deterministic reports") {
  RunConfig c;
  for (const auto& suite : {"local", "global", "permanent", "gsvd"}) {
    const VerifyReport r = run_verify(suite, c);
    CHECK_MESSAGE(r.pass(), suite);
    CHECK(r.first_failure() == nullptr);
    RunConfig many = c;
    many.worker_count = 4;
    CHECK(to_json(run_verify(suite, many)).dump() == to_json(r).dump());
  }
  CHECK_THROWS_AS(run_verify("bogus", c), InputError);
}

TEST_CASE("injected fault is caught by the local suite") {
  const VerifyReport r = run_verify("local", RunConfig{}, Fault::LocalL2);
  CHECK_FALSE(r.pass());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(to_json(r).contains("first_failure"));
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}
