#include "doctest.h"

#include <nlohmann/json.hpp>

#include "appart/errors.hpp"
#include "appart/verify.hpp"

using namespace appart;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.n_range = {1, 8};
  spec.type_weight_max = 8;
  spec.m_range = {1, 3};
  spec.m_prime_range = {1, 3};
  spec.p_range = {1, 2};
  spec.k_range = {0, 2};
  return spec;
}

} // namespace

TEST_CASE("every verifier passes on a small sweep") {
  for (auto th : {Theorem::lemma1, Theorem::thm1, Theorem::thm2, Theorem::thm4, Theorem::prop2,
                  Theorem::prop4}) {
    CAPTURE(theorem_name(th));
    const auto report = run_sweep(th, small_spec());
    CHECK(report.all_pass());
    CHECK_FALSE(report.cells.empty());
  }
}

TEST_CASE("reports do not depend on the number of jobs") {
  auto spec = small_spec();
  const auto serial = run_sweep(Theorem::thm4, spec);
  spec.jobs = 4;
  const auto parallel = run_sweep(Theorem::thm4, spec);
  CHECK(serial.to_table(false) == parallel.to_table(false));
  CHECK(serial.to_json(false) == parallel.to_json(false));
}

TEST_CASE("json report") {
  const auto report = run_sweep(Theorem::lemma1, small_spec());
  const auto j = nlohmann::json::parse(report.to_json(true));
  CHECK(j["theorem"] == "lemma1");
  CHECK(j["pass"] == true);
  CHECK(j["cells"].size() == report.cells.size());
  CHECK(j.contains("wall_seconds"));
  CHECK_FALSE(nlohmann::json::parse(report.to_json(false)).contains("wall_seconds"));
}

TEST_CASE("boundary cells record the underlying-set count") {
  // n = i_r * m: 1^2 2^1 with m = 2 on Z_4 has 4 sequence partitions over
  // 2 distinct underlying set partitions.
  CHECK(count_underlying_partitions(4, 2, PartitionType::parse("1^2,2^1"), {}) == 2);
  SweepSpec spec = small_spec();
  spec.n_range = {4, 4};
  spec.m_range = {2, 2};
  const auto report = run_sweep(Theorem::thm2, spec);
  CHECK(report.all_pass());
  CHECK(report.flagged() >= 1);
}

TEST_CASE("sweep spec validation and budget") {
  SweepSpec bad = small_spec();
  bad.n_range = {5, 4};
  CHECK_THROWS_AS(run_sweep(Theorem::thm1, bad), PreconditionError);
  bad = small_spec();
  bad.k_range = {-1, 2};
  CHECK_THROWS_AS(run_sweep(Theorem::thm1, bad), PreconditionError);

  SweepSpec tight = small_spec();
  tight.budget.max_nodes = 3;
  CHECK_THROWS_AS(run_sweep(Theorem::thm2, tight), BudgetExceeded);
}

TEST_CASE("theorem names") {
  for (auto th : {Theorem::lemma1, Theorem::thm1, Theorem::thm2, Theorem::thm4, Theorem::prop2,
                  Theorem::prop4})
    CHECK(parse_theorem(theorem_name(th)) == th);
  CHECK_FALSE(parse_theorem("thm3"));
}
