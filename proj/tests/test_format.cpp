#include "doctest.h"

#include <random>

#include "appart/enumerate.hpp"
#include "appart/errors.hpp"
#include "appart/format.hpp"

using namespace appart;

TEST_CASE("canonical text form") {
  const APPartition p(12, 2, {{7, 3}, {8, 1}, {10, 2}, {1, 1}, {2, 3}, {3, 1}, {5, 1}});
  CHECK(to_text(p) == "n=12 m=2 blocks=(1:1)(2:3)(3:1)(5:1)(7:3)(8:1)(10:2)");
  CHECK(to_sequences(p) == "(1),(2,4,6),(3),(5),(7,9,11),(8),(10,12)");

  const auto parsed = parse_text("n=12 m=2 blocks=(1:1)(2:3)(3:1)(5:1)(7:3)(8:1)(10:2)");
  CHECK(parsed.partition == p);
  CHECK_FALSE(parsed.normalized);
}

TEST_CASE("canonical json form") {
  const APPartition p(4, 2, {{3, 2}, {2, 1}, {4, 1}});
  CHECK(to_json(p) ==
        R"({"n":4,"m":2,"blocks":[{"head":2,"len":1},{"head":3,"len":2},{"head":4,"len":1}]})");
  CHECK(parse_json(to_json(p)).partition == p);
  CHECK(parse_any("  " + to_json(p)).partition == p);
}

TEST_CASE("non-canonical order is rejected unless normalizing") {
  const std::string text = "n=12 m=1 blocks=(7:3)(10:1)(11:2)(1:1)(2:3)(5:1)(6:1)";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("increasing head order"),
                       PreconditionError);
  const auto r = parse_text(text, true);
  CHECK(r.normalized);
  CHECK(to_text(r.partition) == "n=12 m=1 blocks=(1:1)(2:3)(5:1)(6:1)(7:3)(10:1)(11:2)");

  const std::string json = R"({"n":3,"m":1,"blocks":[{"head":3,"len":1},{"head":1,"len":2}]})";
  CHECK_THROWS_AS(parse_json(json), PreconditionError);
  CHECK(parse_json(json, true).normalized);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_text("n=4 blocks=(1:4)"), PreconditionError);
  CHECK_THROWS_AS(parse_text("n=4 m=1 blocks=(1:4"), PreconditionError);
  CHECK_THROWS_AS(parse_text("n=4 m=1 blocks=(1:4) extra"), PreconditionError);
  CHECK_THROWS_AS(parse_text("n=4 m=1 blocks=(9:1)"), PreconditionError);
  CHECK_THROWS_AS(parse_json(R"({"n":4,"m":1.5,"blocks":[]})"), PreconditionError);
  CHECK_THROWS_AS(parse_json(R"({"n":4,"m":1,"blocks":[{"head":"1","len":4}]})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_json("{"), PreconditionError);
}

TEST_CASE("both forms round-trip every enumerated partition") {
  const auto t = PartitionType::parse("1^3,2^2,3^1");
  for (int m = 1; m <= 3; ++m) {
    for (const auto &p : enumerate_ap_partitions(10, m, t, {}).items) {
      CHECK(parse_text(to_text(p)).partition == p);
      CHECK(parse_json(to_json(p)).partition == p);
    }
  }
}
