#pragma once

#include <string>
#include <vector>

#include "appart/core.hpp"

namespace appart {

/// g counts the singletons strictly between h* and h, where h* is the nearest
/// non-singleton head reached walking counterclockwise (downward) from h.
/// When h is the only non-singleton head, the walk wraps back to h itself.
struct HeadProfile {
  int head;
  bool is_singleton;
  int g;
  bool operator==(const HeadProfile &) const = default;
};

/// Linear order origin < origin+1 < ... < origin-1 on Z_n.
class RelativeOrder {
public:
  RelativeOrder(int origin, int n);

  int origin() const { return origin_; }
  int n() const { return n_; }
  /// 0 for the origin, n-1 for the element just before it.
  int rank(int element) const;
  int element_at(int rank) const;
  bool less(int a, int b) const { return rank(a) < rank(b); }

private:
  int origin_;
  int n_;
};

/// One profile per block, by increasing head. Requires a valid partition
/// whose type has i_1 = 1 and r >= 2.
std::vector<HeadProfile> head_profiles(const APPartition &p);

/// Heads of maximal g, increasing. Each heads a non-singleton block.
std::vector<int> starting_points(const APPartition &p);

struct SeparationStep {
  int source_head;
  int length;
  int target_head;
  std::vector<int> elements; // in block order
};

struct SeparationTrace {
  int start = 0;
  int max_g = 0;
  std::vector<SeparationStep> steps;

  std::string to_string() const;
};

/// Maps an m-AP-partition to the m'-AP-partition of the same type: heads
/// are visited in the order anchored at the starting point; each new block
/// keeps its source length and is headed at the smallest element not yet
/// covered. The starting point is the maximal-g head with the smallest label.
/// Throws PreconditionError when the separation condition for (m, m') fails.
APPartition separate(const APPartition &p, int m_prime,
                     SeparationTrace *trace = nullptr);

/// As separate, with an explicit starting point; `start` must be in
/// starting_points(p).
APPartition separate_from(const APPartition &p, int m_prime, int start,
                          SeparationTrace *trace = nullptr);

/// Checks separate(separate(p, m'), m) == p, and that the starting point
/// used for p is again a maximal-g head of the image.
bool verify_roundtrip(const APPartition &p, int m_prime);

} // namespace appart
