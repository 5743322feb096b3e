#include "appart/core.hpp"

#include <algorithm>

#include "appart/errors.hpp"

namespace appart {

int wrap(long long value, int n) {
  long long r = value % n;
  if (r <= 0)
    r += n;
  return static_cast<int>(r);
}

APPartition::APPartition(int n_, int difference_, std::vector<APBlock> blocks_)
    : n(n_), difference(difference_), blocks(std::move(blocks_)) {
  if (n < 1)
    throw PreconditionError("cycle size n must be positive");
  if (difference < 1)
    throw PreconditionError("difference m must be positive");
  for (const auto &b : blocks) {
    if (b.head < 1 || b.head > n)
      throw PreconditionError("block head " + std::to_string(b.head) + " outside [1, " +
                              std::to_string(n) + "]");
    if (b.length < 1)
      throw PreconditionError("block length must be positive");
  }
  std::sort(blocks.begin(), blocks.end());
}

std::vector<int> block_sequence(const APBlock &b, int n, int m) {
  if (b.length < 1 || b.length > n)
    throw PreconditionError("block length " + std::to_string(b.length) +
                            " outside [1, " + std::to_string(n) + "]");
  std::vector<int> seq;
  seq.reserve(b.length);
  for (int j = 0; j < b.length; ++j)
    seq.push_back(wrap(b.head + static_cast<long long>(j) * m, n));
  // An arithmetic progression mod n first repeats by returning to its head.
  for (int j = 1; j < b.length; ++j)
    if (seq[j] == b.head)
      throw PreconditionError("self-overlapping block (" + std::to_string(b.head) + ":" +
                              std::to_string(b.length) + ")");
  return seq;
}

std::vector<int> underlying_set(const APBlock &b, int n, int m) {
  auto seq = block_sequence(b, n, m);
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::optional<Violation> validate_partition(const APPartition &p) {
  Violation v;
  std::vector<int> cover_count(p.n + 1, 0);
  for (const auto &b : p.blocks) {
    std::vector<int> seq;
    try {
      seq = block_sequence(b, p.n, p.difference);
    } catch (const PreconditionError &) {
      v.self_overlaps.push_back(b.head);
      continue;
    }
    for (int x : seq)
      ++cover_count[x];
  }
  for (int x = 1; x <= p.n; ++x) {
    if (cover_count[x] > 1)
      v.duplicated.push_back(x);
    else if (cover_count[x] == 0)
      v.missing.push_back(x);
  }
  if (v.duplicated.empty() && v.missing.empty() && v.self_overlaps.empty())
    return std::nullopt;

  auto append = [&](const std::string &item) {
    if (!v.message.empty())
      v.message += ", ";
    v.message += item;
  };
  for (int h : v.self_overlaps)
    append("block headed at " + std::to_string(h) + " overlaps itself");
  for (int x : v.duplicated)
    append("element " + std::to_string(x) + " covered twice");
  for (int x : v.missing)
    append("element " + std::to_string(x) + " uncovered");
  return v;
}

void require_valid(const APPartition &p) {
  if (auto v = validate_partition(p))
    throw PreconditionError("invalid partition: " + v->message);
}

PartitionType type_of(const APPartition &p) {
  require_valid(p);
  std::vector<int> sizes;
  sizes.reserve(p.blocks.size());
  for (const auto &b : p.blocks)
    sizes.push_back(b.length);
  return PartitionType::from_sizes(sizes);
}

std::vector<APBlock> block_from_set(const std::vector<int> &s, int n, int m) {
  if (s.empty())
    throw PreconditionError("block_from_set needs a nonempty set");
  std::vector<int> target(s);
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(target.begin(), target.end()) != target.end())
    throw PreconditionError("set has repeated elements");
  if (target.front() < 1 || target.back() > n)
    throw PreconditionError("set elements must lie in [1, n]");

  std::vector<APBlock> out;
  const int len = static_cast<int>(target.size());
  for (int head : target) {
    APBlock candidate{head, len};
    try {
      if (underlying_set(candidate, n, m) == target)
        out.push_back(candidate);
    } catch (const PreconditionError &) {
      // self-overlapping from this head: not a representation
    }
  }
  return out;
}

bool check_condition(const PartitionType &t, int m, int m_prime) {
  if (!t.has_singletons_and_blocks())
    throw PreconditionError("unsupported type " + t.to_string() +
                            ": needs at least one singleton and one larger block");
  if (m < 1 || m_prime < 1)
    throw PreconditionError("differences must be positive");
  const long long k1 = t.singletons();
  const long long rest = t.non_singleton_blocks();
  const long long ceil_ratio = (k1 + rest - 1) / rest;
  const long long bound =
      static_cast<long long>(std::max(m, m_prime) - 1) * (t.largest() - 1);
  return ceil_ratio >= bound;
}

APPartition rotate(const APPartition &p, int offset) {
  std::vector<APBlock> blocks;
  blocks.reserve(p.blocks.size());
  for (const auto &b : p.blocks)
    blocks.push_back({wrap(static_cast<long long>(b.head) + offset, p.n), b.length});
  return APPartition(p.n, p.difference, std::move(blocks));
}

} // namespace appart
