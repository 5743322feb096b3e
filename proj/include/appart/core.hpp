#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "appart/partition_type.hpp"

namespace appart {

/// Reduce an arbitrary integer to the representative of its class in Z_n,
/// written in [1, n] (residue 0 is written n).
int wrap(long long value, int n);

/// An arithmetic-progression block (head, head+m, ..., head+(length-1)m).
/// The difference m belongs to the enclosing partition.
struct APBlock {
  int head = 1;
  int length = 1;

  bool is_singleton() const { return length == 1; }
  auto operator<=>(const APBlock &) const = default;
};

/// A set of m-AP-blocks of Z_n. Blocks are kept in increasing head order,
/// which is the canonical order for comparison and serialization.
/// Construction only checks ranges; use validate_partition for coverage.
struct APPartition {
  int n = 1;
  int difference = 1;
  std::vector<APBlock> blocks;

  APPartition() = default;
  APPartition(int n, int difference, std::vector<APBlock> blocks);

  bool operator==(const APPartition &) const = default;
  auto operator<=>(const APPartition &) const = default;
};

struct Violation {
  std::vector<int> duplicated;    // elements covered more than once
  std::vector<int> missing;       // elements no block covers
  std::vector<int> self_overlaps; // heads of blocks that revisit an element
  std::string message;            // e.g. "element 2 covered twice, element 4 uncovered"
};

/// Empty when the blocks' underlying sets partition {1..n}; otherwise every
/// problem found, each list in increasing order.
std::optional<Violation> validate_partition(const APPartition &p);

/// Throws PreconditionError with the violation message if p is invalid.
void require_valid(const APPartition &p);

PartitionType type_of(const APPartition &p);

/// Elements of the block in increasing natural order.
/// Throws PreconditionError("self-overlapping block") if the progression
/// revisits an element before reaching `length` terms.
std::vector<int> underlying_set(const APBlock &b, int n, int m);

/// Same elements, in block (sequence) order.
std::vector<int> block_sequence(const APBlock &b, int n, int m);

/// Every block (head, |s|) whose underlying set is s, by increasing head.
/// An empty result means s is not an m-AP-block.
std::vector<APBlock> block_from_set(const std::vector<int> &s, int n, int m);

/// The separation condition for a pair of differences:
///   ceil(k1 / (k2+...+kr)) >= (max{m, m'} - 1)(i_r - 1).
/// Pass m_prime == m for the single-difference form.
/// Throws PreconditionError("unsupported type") unless i_1 = 1 and r >= 2.
bool check_condition(const PartitionType &t, int m, int m_prime);

/// Shift every head by `offset` (mod n).
APPartition rotate(const APPartition &p, int offset);

} // namespace appart
