#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "appart/core.hpp"

namespace appart {

/// Caps the number of search-tree nodes an enumeration may visit.
struct EnumerationBudget {
  enum class OnExceed { fail, truncate };

  std::uint64_t max_nodes = 50'000'000;
  OnExceed on_exceed = OnExceed::fail;

  /// Default budget, overridden by the APPART_BUDGET environment variable.
  static EnumerationBudget from_environment();
};

struct EnumerationStats {
  std::uint64_t results = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

template <typename T> struct Enumeration {
  std::vector<T> items;
  EnumerationStats stats;
};

using PartitionVisitor = std::function<void(const APPartition &)>;

/// Streams every m-AP-partition of Z_n of type t to `visit`, each exactly
/// once. The search branches on the smallest uncovered element x: for every
/// remaining block size s and offset j in [0, s), it tries the block headed
/// at x - j*m when all of its elements are uncovered.
/// Budget overrun throws BudgetExceeded (fail) or stops early and sets
/// stats.truncated (truncate).
EnumerationStats visit_ap_partitions(int n, int m, const PartitionType &t,
                                     const EnumerationBudget &budget,
                                     const PartitionVisitor &visit);

Enumeration<APPartition> enumerate_ap_partitions(int n, int m,
                                                 const PartitionType &t,
                                                 const EnumerationBudget &budget);

/// Dissections of the n-cycle of type t, generated by fixing the segment
/// through element 1 and laying out every distinct arrangement of the
/// remaining sizes clockwise after it. Independent of the AP search above;
/// both produce the same set for m = 1.
EnumerationStats visit_dissections(int n, const PartitionType &t,
                                   const EnumerationBudget &budget,
                                   const PartitionVisitor &visit);

Enumeration<APPartition> enumerate_dissections(int n, const PartitionType &t,
                                               const EnumerationBudget &budget);

/// True when no ordered pair of distinct elements has a cyclic difference
/// x_i - x_j (mod n) in {m, 2m, ..., pm}.
bool is_spaced(const std::vector<int> &subset, int n, int m, int p);

/// All k-subsets of Z_n (each sorted ascending, in lexicographic order)
/// satisfying is_spaced.
std::vector<std::vector<int>> enumerate_spaced_subsets(int n, int m, int p, int k);

/// The m-AP-partition of type 1^{n-(p+1)k} (p+1)^k whose blocks of length
/// p+1 start at `heads`; every other element is a singleton.
APPartition subsets_to_partitions(int n, int m, int p, const std::vector<int> &heads);

} // namespace appart
