#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "appart/partition_type.hpp"

namespace appart {

using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt &value);

BigInt binomial(int n, int k);
/// (k_1 + ... + k_r)! / (k_1! ... k_r!)
BigInt multinomial(const std::vector<int> &counts);

/// numerator / denominator, throwing InvariantViolation on a remainder.
BigInt exact_div(const BigInt &numerator, const BigInt &denominator);

/// n/(n-k) * C(n-k, k): k-subsets of Z_n with no two cyclically adjacent
/// elements. Requires n >= 2k+1 for k >= 1; kaplansky(n, 0) = 1.
BigInt kaplansky(int n, int k);

/// n/(n-pk) * C(n-pk, k), requires n >= pk+1 (any n >= 1 when k = 0).
BigInt generalized_kaplansky(int n, int p, int k);

/// Count of k-subsets with no ordered difference in {m, 2m, ..., pm}.
/// Equal to generalized_kaplansky(n, p, k); m only tightens the regime to
/// n >= mpk+1.
BigInt msun_count(int n, int m, int p, int k);

/// n/(k_1+...+k_r) * multinomial(k_1, ..., k_r), the number of dissections
/// of an n-cycle of type t. Requires weight(t) = n.
BigInt cyclic_multinomial(int n, const PartitionType &t);

} // namespace appart
