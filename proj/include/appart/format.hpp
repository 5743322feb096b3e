#pragma once

#include <string>
#include <string_view>

#include "appart/core.hpp"

namespace appart {

/// Canonical text: `n=12 m=2 blocks=(1:1)(2:3)(3:1)...`, blocks by head.
std::string to_text(const APPartition &p);

/// Canonical structured form: {"n":..,"m":..,"blocks":[{"head":..,"len":..},..]}.
std::string to_json(const APPartition &p);

struct ParseResult {
  APPartition partition;
  bool normalized = false; // blocks arrived out of canonical order and were sorted
};

/// Parsers for the two canonical forms. Out-of-order blocks are rejected
/// with a PreconditionError that suggests normalizing, unless `normalize`
/// is set, in which case they are sorted and the result is flagged.
/// Neither parser checks coverage; call validate_partition for that.
ParseResult parse_text(std::string_view text, bool normalize = false);
ParseResult parse_json(std::string_view text, bool normalize = false);

/// Picks the parser from the first non-blank character ('{' means JSON).
ParseResult parse_any(std::string_view text, bool normalize = false);

/// `(7,9,11),(8),(10,12)` in canonical block order, the way partitions are
/// usually written out by hand.
std::string to_sequences(const APPartition &p);

} // namespace appart
