#pragma once

#include <optional>
#include <string>
#include <vector>

#include "appart/enumerate.hpp"

namespace appart {

struct IntRange {
  int lo = 1;
  int hi = 1;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Parameter box for a verification sweep. Each verifier reads only the
/// ranges it needs.
struct SweepSpec {
  IntRange n_range{1, 12};
  IntRange m_range{1, 4};
  IntRange m_prime_range{1, 4};
  IntRange p_range{1, 3};
  IntRange k_range{0, 3};
  int type_weight_max = 12; // caps n for type-indexed sweeps
  EnumerationBudget budget;
  int jobs = 1;

  /// Throws PreconditionError on an empty or inverted range.
  void validate() const;
};

enum class Theorem { lemma1, thm1, thm2, thm4, prop2, prop4 };

std::optional<Theorem> parse_theorem(const std::string &name);
std::string theorem_name(Theorem t);

struct CellResult {
  std::vector<int> key; // sort key: the cell's parameters
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = true;
  std::string note; // informational, never affects pass
};

struct SweepReport {
  Theorem theorem;
  std::vector<CellResult> cells; // sorted by key
  double wall_seconds = 0;

  bool all_pass() const;
  std::size_t failures() const;
  /// Cells carrying a note (e.g. boundary discrepancies).
  std::size_t flagged() const;
  std::string to_table(bool timing) const;
  std::string to_json(bool timing) const;
};

/// Runs one verifier over the sweep. Cell order in the report does not
/// depend on `spec.jobs`.
SweepReport run_sweep(Theorem theorem, const SweepSpec &spec);

/// Number of distinct underlying set partitions among the m-AP-partitions
/// of type t (differs from the sequence count only when some block fills a
/// whole coset of m).
std::uint64_t count_underlying_partitions(int n, int m, const PartitionType &t,
                                          const EnumerationBudget &budget);

} // namespace appart
