#include "appart/counting.hpp"

#include "appart/errors.hpp"

namespace appart {

std::string to_decimal(const BigInt &value) { return value.str(); }

BigInt binomial(int n, int k) {
  if (n < 0)
    throw PreconditionError("binomial: n must be nonnegative");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i the value is C(n-k+i, i), so every division is exact.
  for (int i = 1; i <= k; ++i)
    result = exact_div(result * (n - k + i), i);
  return result;
}

BigInt multinomial(const std::vector<int> &counts) {
  BigInt result = 1;
  int total = 0;
  for (int c : counts) {
    if (c < 0)
      throw PreconditionError("multinomial: counts must be nonnegative");
    total += c;
    result *= binomial(total, c);
  }
  return result;
}

BigInt exact_div(const BigInt &numerator, const BigInt &denominator) {
  if (denominator == 0)
    throw InvariantViolation("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw InvariantViolation("exact_div: " + numerator.str() + " / " + denominator.str() +
                             " leaves remainder " + r.str());
  return q;
}

BigInt kaplansky(int n, int k) {
  if (k < 0)
    throw PreconditionError("kaplansky: k must be nonnegative");
  if (k == 0)
    return 1;
  if (n < 2 * k + 1)
    throw PreconditionError("kaplansky: out of regime, needs n >= 2k+1 (n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
  return exact_div(BigInt(n) * binomial(n - k, k), n - k);
}

BigInt generalized_kaplansky(int n, int p, int k) {
  if (p < 1)
    throw PreconditionError("generalized kaplansky: p must be positive");
  if (k < 0)
    throw PreconditionError("generalized kaplansky: k must be nonnegative");
  if (n < 1)
    throw PreconditionError("generalized kaplansky: n must be positive");
  if (k == 0)
    return 1;
  const long long pk = static_cast<long long>(p) * k;
  if (n < pk + 1)
    throw PreconditionError("generalized kaplansky: out of regime, needs n >= pk+1 (n=" +
                            std::to_string(n) + ", pk=" + std::to_string(pk) + ")");
  const int free = n - static_cast<int>(pk);
  return exact_div(BigInt(n) * binomial(free, k), free);
}

BigInt msun_count(int n, int m, int p, int k) {
  if (m < 1 || p < 1 || k < 1)
    throw PreconditionError("msun: m, p and k must be positive");
  const long long mpk = static_cast<long long>(m) * p * k;
  if (n < mpk + 1)
    throw PreconditionError("msun: out of regime, needs n >= mpk+1 (n=" + std::to_string(n) +
                            ", mpk=" + std::to_string(mpk) + ")");
  return generalized_kaplansky(n, p, k);
}

BigInt cyclic_multinomial(int n, const PartitionType &t) {
  if (n < 1)
    throw PreconditionError("cyclic multinomial: n must be positive");
  if (t.weight() != n)
    throw PreconditionError("cyclic multinomial: type " + t.to_string() + " has weight " +
                            std::to_string(t.weight()) + ", expected " + std::to_string(n));
  std::vector<int> counts;
  for (const auto &part : t.parts())
    counts.push_back(part.multiplicity);
  return exact_div(BigInt(n) * multinomial(counts), t.block_count());
}

} // namespace appart
