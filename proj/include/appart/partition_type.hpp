#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace appart {

struct TypePart {
  int size;
  int multiplicity;
  auto operator<=>(const TypePart &) const = default;
};

/// Multiset signature i_1^{k_1} i_2^{k_2} ... i_r^{k_r} of block sizes,
/// sizes strictly increasing and every multiplicity positive.
class PartitionType {
public:
  PartitionType() = default;
  /// Throws PreconditionError on non-increasing sizes or non-positive entries.
  explicit PartitionType(std::vector<TypePart> parts);

  /// Canonical type of a list of sizes in any order.
  static PartitionType from_sizes(const std::vector<int> &sizes);

  /// Parses "1^4,2^1,3^2". A bare size ("3") means multiplicity 1.
  static PartitionType parse(std::string_view text);

  const std::vector<TypePart> &parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int block_count() const;
  /// k_1 when the smallest size is 1, else 0.
  int singletons() const;
  int largest() const;
  /// Number of non-singleton blocks (k_2 + ... + k_r when i_1 = 1).
  int non_singleton_blocks() const;
  /// Every size repeated by its multiplicity, increasing.
  std::vector<int> sizes() const;

  /// The standing restriction for the separation machinery: i_1 = 1, r >= 2.
  bool has_singletons_and_blocks() const;

  std::string to_string() const;

  bool operator==(const PartitionType &) const = default;
  auto operator<=>(const PartitionType &) const = default;

private:
  std::vector<TypePart> parts_;
};

/// All types of the given weight (integer partitions of `weight`), in
/// lexicographic order of their part lists.
std::vector<PartitionType> all_types(int weight);

} // namespace appart
