// Command-line front end: exact counts, brute-force enumeration, the
// separation map, and theorem verification sweeps.
//
// Exit codes: 0 success, 2 bad input / out of regime, 3 invariant violated
// (a verification failed), 4 enumeration budget exceeded.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "appart/counting.hpp"
#include "appart/enumerate.hpp"
#include "appart/errors.hpp"
#include "appart/format.hpp"
#include "appart/separation.hpp"
#include "appart/verify.hpp"

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitBudget = 4;

struct BudgetFlags {
  std::optional<std::uint64_t> max_nodes;
  std::string on_exceed = "fail";

  appart::EnumerationBudget resolve() const {
    auto b = appart::EnumerationBudget::from_environment();
    if (max_nodes)
      b.max_nodes = *max_nodes;
    b.on_exceed = on_exceed == "truncate" ? appart::EnumerationBudget::OnExceed::truncate
                                          : appart::EnumerationBudget::OnExceed::fail;
    return b;
  }
};

void add_budget_flags(CLI::App *cmd, BudgetFlags &flags) {
  cmd->add_option("--budget", flags.max_nodes,
                  "Search-node cap (default from APPART_BUDGET, else 50000000)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--on-exceed", flags.on_exceed, "What to do when the budget runs out")
      ->check(CLI::IsMember({"fail", "truncate"}));
}

void report_truncation(const appart::EnumerationStats &stats) {
  if (stats.truncated)
    std::cerr << "warning: truncated after " << stats.nodes << " nodes; output is incomplete\n";
}

std::string subset_line(const std::vector<int> &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string read_all(std::istream &in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string emit(const appart::APPartition &p, const std::string &format) {
  return format == "json" ? appart::to_json(p) : appart::to_text(p);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Partitions of Z_n into arithmetic-progression blocks"};
  app.require_subcommand(1);

  // count
  auto *count = app.add_subcommand("count", "Exact closed-form counts");
  count->require_subcommand(1);
  int n = 0, k = 0, p = 1, m = 1;
  std::string type_text;

  auto *c_kap = count->add_subcommand("kaplansky", "n/(n-k) C(n-k,k)");
  c_kap->add_option("--n", n)->required();
  c_kap->add_option("--k", k)->required();
  auto *c_gen = count->add_subcommand("generalized", "n/(n-pk) C(n-pk,k)");
  c_gen->add_option("--n", n)->required();
  c_gen->add_option("--p", p)->required();
  c_gen->add_option("--k", k)->required();
  auto *c_msun = count->add_subcommand("msun", "Spaced k-subsets, requires n >= mpk+1");
  c_msun->add_option("--n", n)->required();
  c_msun->add_option("--m", m)->required();
  c_msun->add_option("--p", p)->required();
  c_msun->add_option("--k", k)->required();
  auto *c_cyc = count->add_subcommand("cyclic-multinomial", "Dissections of a given type");
  c_cyc->add_option("--n", n)->required();
  c_cyc->add_option("--type", type_text, "e.g. 1^8,2^3,3^2")->required();

  // enumerate
  auto *enumerate = app.add_subcommand("enumerate", "Brute-force enumeration");
  enumerate->require_subcommand(1);
  bool count_only = false;
  std::string out_format = "text";
  BudgetFlags budget_flags;

  auto *e_part = enumerate->add_subcommand("partitions", "m-AP-partitions of a type");
  e_part->add_option("--n", n)->required();
  e_part->add_option("--m", m)->required();
  e_part->add_option("--type", type_text)->required();
  auto *e_dis = enumerate->add_subcommand("dissections", "Cycle dissections of a type");
  e_dis->add_option("--n", n)->required();
  e_dis->add_option("--type", type_text)->required();
  for (auto *cmd : {e_part, e_dis}) {
    add_budget_flags(cmd, budget_flags);
    cmd->add_option("--format", out_format)->check(CLI::IsMember({"text", "json"}));
  }
  auto *e_sub = enumerate->add_subcommand("subsets", "k-subsets avoiding differences m..pm");
  e_sub->add_option("--n", n)->required();
  e_sub->add_option("--m", m)->required();
  e_sub->add_option("--p", p)->required();
  e_sub->add_option("--k", k)->required();
  for (auto *cmd : {e_part, e_dis, e_sub})
    cmd->add_flag("--count-only", count_only, "Print only the number of results");

  // separate
  auto *separate = app.add_subcommand("separate", "Map an m-AP-partition to an m'-AP-partition");
  std::string input;
  int target = 1;
  std::optional<int> start;
  bool trace = false;
  bool normalize = false;
  separate->add_option("partition", input, "Partition line (text or JSON); read from stdin if absent");
  separate->add_option("--to", target, "Target difference m'")->required()->check(CLI::PositiveNumber);
  separate->add_option("--start", start, "Explicit starting head (must have maximal g)");
  separate->add_flag("--trace", trace, "Print the head-by-head construction to stderr");
  separate->add_flag("--normalize", normalize, "Accept blocks out of canonical order");
  separate->add_option("--format", out_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto *verify = app.add_subcommand("verify", "Check a theorem across a parameter sweep");
  std::string theorem_text;
  appart::SweepSpec sweep;
  std::optional<int> weight_max;
  std::string report_format = "table";
  bool timing = false;
  verify->add_option("theorem", theorem_text, "lemma1|thm1|thm2|thm4|prop2|prop4")
      ->required()
      ->check(CLI::IsMember({"lemma1", "thm1", "thm2", "thm4", "prop2", "prop4"}));
  verify->add_option("--n-min", sweep.n_range.lo);
  verify->add_option("--n-max", sweep.n_range.hi);
  verify->add_option("--m-min", sweep.m_range.lo);
  verify->add_option("--m-max", sweep.m_range.hi);
  verify->add_option("--mprime-min", sweep.m_prime_range.lo);
  verify->add_option("--mprime-max", sweep.m_prime_range.hi);
  verify->add_option("--p-min", sweep.p_range.lo);
  verify->add_option("--p-max", sweep.p_range.hi);
  verify->add_option("--k-min", sweep.k_range.lo);
  verify->add_option("--k-max", sweep.k_range.hi);
  verify->add_option("--type-weight-max", weight_max, "Cap on type weight (default: n-max)");
  verify->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", report_format)->check(CLI::IsMember({"table", "json"}));
  verify->add_flag("--timing", timing, "Include wall time in the report");
  add_budget_flags(verify, budget_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (count->parsed()) {
      appart::BigInt result;
      if (c_kap->parsed())
        result = appart::kaplansky(n, k);
      else if (c_gen->parsed())
        result = appart::generalized_kaplansky(n, p, k);
      else if (c_msun->parsed())
        result = appart::msun_count(n, m, p, k);
      else
        result = appart::cyclic_multinomial(n, appart::PartitionType::parse(type_text));
      std::cout << appart::to_decimal(result) << '\n';
      return 0;
    }

    if (enumerate->parsed()) {
      if (e_sub->parsed()) {
        const auto subsets = appart::enumerate_spaced_subsets(n, m, p, k);
        if (count_only) {
          std::cout << subsets.size() << '\n';
        } else {
          for (const auto &s : subsets)
            std::cout << subset_line(s) << '\n';
        }
        return 0;
      }
      const auto t = appart::PartitionType::parse(type_text);
      const auto budget = budget_flags.resolve();
      auto print = [&](const appart::APPartition &part) {
        if (!count_only)
          std::cout << emit(part, out_format) << '\n';
      };
      const auto stats = e_part->parsed() ? appart::visit_ap_partitions(n, m, t, budget, print)
                                          : appart::visit_dissections(n, t, budget, print);
      if (count_only)
        std::cout << stats.results << '\n';
      report_truncation(stats);
      return 0;
    }

    if (separate->parsed()) {
      if (input.empty())
        input = read_all(std::cin);
      const auto parsed = appart::parse_any(input, normalize);
      if (parsed.normalized)
        std::cerr << "warning: blocks were reordered into canonical order\n";
      appart::SeparationTrace steps;
      auto *trace_ptr = trace ? &steps : nullptr;
      const auto result = start ? appart::separate_from(parsed.partition, target, *start, trace_ptr)
                                : appart::separate(parsed.partition, target, trace_ptr);
      if (trace)
        std::cerr << steps.to_string();
      std::cout << emit(result, out_format) << '\n';
      return 0;
    }

    if (verify->parsed()) {
      const auto theorem = appart::parse_theorem(theorem_text);
      sweep.type_weight_max = weight_max.value_or(sweep.n_range.hi);
      sweep.budget = budget_flags.resolve();
      const auto report = appart::run_sweep(*theorem, sweep);
      std::cout << (report_format == "json" ? report.to_json(timing) : report.to_table(timing));
      return report.all_pass() ? 0 : kExitInvariant;
    }
  } catch (const appart::PreconditionError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const appart::InvariantViolation &e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const appart::BudgetExceeded &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  return 0;
}
