#include "appart/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "appart/errors.hpp"

namespace appart {

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget b;
  if (const char *env = std::getenv("APPART_BUDGET")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw PreconditionError("APPART_BUDGET must be a positive integer, got '" +
                              std::string(env) + "'");
    b.max_nodes = v;
  }
  return b;
}

namespace {

void check_weight(int n, const PartitionType &t) {
  if (n < 1)
    throw PreconditionError("n must be positive");
  if (t.weight() != n)
    throw PreconditionError("type " + t.to_string() + " has weight " +
                            std::to_string(t.weight()) + ", expected n=" + std::to_string(n));
}

// Thrown internally to unwind a truncated search.
struct StopSearch {};

class NodeCounter {
public:
  NodeCounter(const EnumerationBudget &budget, EnumerationStats &stats)
      : budget_(budget), stats_(stats) {
    if (budget.max_nodes < 1)
      throw PreconditionError("enumeration budget must allow at least one node");
  }

  void enter() {
    if (stats_.nodes >= budget_.max_nodes) {
      if (budget_.on_exceed == EnumerationBudget::OnExceed::fail)
        throw BudgetExceeded("enumeration exceeded its budget of " +
                             std::to_string(budget_.max_nodes) + " nodes");
      stats_.truncated = true;
      throw StopSearch{};
    }
    ++stats_.nodes;
  }

private:
  const EnumerationBudget &budget_;
  EnumerationStats &stats_;
};

class APSearch {
public:
  APSearch(int n, int m, const PartitionType &t, NodeCounter &counter, EnumerationStats &stats,
           const PartitionVisitor &visit)
      : n_(n), m_(m), counter_(counter), stats_(stats), visit_(visit), covered_(n + 1, 0) {
    for (const auto &part : t.parts()) {
      sizes_.push_back(part.size);
      remaining_.push_back(part.multiplicity);
    }
  }

  void run() { recurse(1, n_); }

private:
  void recurse(int scan_from, int uncovered) {
    counter_.enter();
    if (uncovered == 0) {
      ++stats_.results;
      visit_(APPartition(n_, m_, blocks_));
      return;
    }
    int x = scan_from;
    while (covered_[x])
      ++x;
    for (std::size_t si = 0; si < sizes_.size(); ++si) {
      if (remaining_[si] == 0)
        continue;
      const int s = sizes_[si];
      for (int j = 0; j < s; ++j) {
        const int head = wrap(x - static_cast<long long>(j) * m_, n_);
        if (!place(head, s))
          continue;
        --remaining_[si];
        blocks_.push_back({head, s});
        recurse(x + 1, uncovered - s);
        blocks_.pop_back();
        ++remaining_[si];
        unplace(head, s);
      }
    }
  }

  // Marks the block's elements when all are free and distinct.
  bool place(int head, int length) {
    int placed = 0;
    for (; placed < length; ++placed) {
      int e = wrap(head + static_cast<long long>(placed) * m_, n_);
      if (covered_[e])
        break;
      covered_[e] = 1;
    }
    if (placed == length)
      return true;
    unplace(head, placed);
    return false;
  }

  void unplace(int head, int length) {
    for (int i = 0; i < length; ++i)
      covered_[wrap(head + static_cast<long long>(i) * m_, n_)] = 0;
  }

  int n_, m_;
  NodeCounter &counter_;
  EnumerationStats &stats_;
  const PartitionVisitor &visit_;
  std::vector<char> covered_;
  std::vector<int> sizes_;
  std::vector<int> remaining_;
  std::vector<APBlock> blocks_;
};

template <typename Visit>
EnumerationStats run_guarded(const EnumerationBudget &budget, Visit &&body) {
  EnumerationStats stats;
  NodeCounter counter(budget, stats);
  try {
    body(counter, stats);
  } catch (const StopSearch &) {
  }
  return stats;
}

template <typename VisitFn>
Enumeration<APPartition> collect(VisitFn &&visit_fn) {
  Enumeration<APPartition> out;
  out.stats = visit_fn([&](const APPartition &p) { out.items.push_back(p); });
  return out;
}

} // namespace

EnumerationStats visit_ap_partitions(int n, int m, const PartitionType &t,
                                     const EnumerationBudget &budget,
                                     const PartitionVisitor &visit) {
  check_weight(n, t);
  if (m < 1)
    throw PreconditionError("difference m must be positive");
  return run_guarded(budget, [&](NodeCounter &counter, EnumerationStats &stats) {
    APSearch(n, m, t, counter, stats, visit).run();
  });
}

Enumeration<APPartition> enumerate_ap_partitions(int n, int m, const PartitionType &t,
                                                 const EnumerationBudget &budget) {
  return collect([&](const PartitionVisitor &v) { return visit_ap_partitions(n, m, t, budget, v); });
}

EnumerationStats visit_dissections(int n, const PartitionType &t, const EnumerationBudget &budget,
                                   const PartitionVisitor &visit) {
  check_weight(n, t);
  return run_guarded(budget, [&](NodeCounter &counter, EnumerationStats &stats) {
    std::vector<int> sizes = t.sizes();
    std::vector<int> distinct;
    for (const auto &part : t.parts())
      distinct.push_back(part.size);

    for (int first : distinct) {
      // The segment containing element 1 has `first` elements and starts
      // `offset` places before it.
      std::vector<int> rest = sizes;
      rest.erase(std::find(rest.begin(), rest.end(), first));
      for (int offset = 0; offset < first; ++offset) {
        std::vector<int> arrangement = rest; // sorted, so next_permutation visits all
        do {
          counter.enter();
          std::vector<APBlock> blocks;
          int head = wrap(1 - offset, n);
          blocks.push_back({head, first});
          int next = head + first;
          for (int s : arrangement) {
            blocks.push_back({wrap(next, n), s});
            next += s;
          }
          ++stats.results;
          visit(APPartition(n, 1, std::move(blocks)));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  });
}

Enumeration<APPartition> enumerate_dissections(int n, const PartitionType &t,
                                               const EnumerationBudget &budget) {
  return collect([&](const PartitionVisitor &v) { return visit_dissections(n, t, budget, v); });
}

bool is_spaced(const std::vector<int> &subset, int n, int m, int p) {
  for (int a : subset)
    for (int b : subset) {
      if (a == b)
        continue;
      const int diff = wrap(a - b, n) % n; // in [0, n)
      for (int j = 1; j <= p; ++j)
        if (diff == static_cast<int>((static_cast<long long>(j) * m) % n))
          return false;
    }
  return true;
}

std::vector<std::vector<int>> enumerate_spaced_subsets(int n, int m, int p, int k) {
  if (n < 1 || k < 0 || m < 1 || p < 1)
    throw PreconditionError("spaced subsets need n, m, p >= 1 and k >= 0");
  std::vector<std::vector<int>> out;
  if (k > n)
    return out;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i)
    combo[i] = i + 1;
  while (true) {
    if (is_spaced(combo, n, m, p))
      out.push_back(combo);
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + 1 + i)
      --i;
    if (i < 0)
      break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j)
      combo[j] = combo[j - 1] + 1;
  }
  return out;
}

APPartition subsets_to_partitions(int n, int m, int p, const std::vector<int> &heads) {
  if (m < 1 || p < 1)
    throw PreconditionError("subsets_to_partitions: m and p must be positive");
  const long long k = static_cast<long long>(heads.size());
  if (k > 0 && n < static_cast<long long>(m) * p * k + 1)
    throw PreconditionError("subsets_to_partitions: needs n >= mpk+1");
  for (int h : heads)
    if (h < 1 || h > n)
      throw PreconditionError("subsets_to_partitions: head outside [1, n]");
  std::vector<int> sorted(heads);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("subsets_to_partitions: repeated head");
  if (!is_spaced(sorted, n, m, p))
    throw PreconditionError("subsets_to_partitions: heads violate the spacing condition, "
                            "blocks would overlap");

  std::vector<char> covered(n + 1, 0);
  std::vector<APBlock> blocks;
  for (int h : sorted) {
    blocks.push_back({h, p + 1});
    for (int x : block_sequence({h, p + 1}, n, m))
      covered[x] = 1;
  }
  for (int x = 1; x <= n; ++x)
    if (!covered[x])
      blocks.push_back({x, 1});
  APPartition result(n, m, std::move(blocks));
  if (auto v = validate_partition(result))
    throw InvariantViolation("subsets_to_partitions built an invalid partition: " + v->message);
  return result;
}

} // namespace appart
