#include "appart/separation.hpp"

#include <algorithm>
#include <sstream>

#include "appart/errors.hpp"
#include "appart/format.hpp"

namespace appart {

RelativeOrder::RelativeOrder(int origin, int n) : origin_(origin), n_(n) {
  if (n < 1 || origin < 1 || origin > n)
    throw PreconditionError("relative order origin must lie in [1, n]");
}

int RelativeOrder::rank(int element) const { return wrap(element - origin_ + 1, n_) - 1; }

int RelativeOrder::element_at(int rank) const { return wrap(origin_ + rank, n_); }

namespace {

void require_separable(const APPartition &p) {
  require_valid(p);
  auto t = type_of(p);
  if (!t.has_singletons_and_blocks())
    throw PreconditionError("unsupported type " + t.to_string() +
                            ": separation needs at least one singleton and one larger block");
}

// For each element: the length of the block it heads, or 0 if not a head.
std::vector<int> head_lengths(const APPartition &p) {
  std::vector<int> lengths(p.n + 1, 0);
  for (const auto &b : p.blocks)
    lengths[b.head] = b.length;
  return lengths;
}

std::vector<HeadProfile> compute_profiles(const APPartition &p) {
  const auto lengths = head_lengths(p);
  std::vector<HeadProfile> out;
  out.reserve(p.blocks.size());
  for (const auto &b : p.blocks) {
    int g = 0;
    // Walk counterclockwise until a non-singleton head; a singleton element is
    // exactly a head of length 1.
    for (int step = 1; step <= p.n; ++step) {
      int x = wrap(static_cast<long long>(b.head) - step, p.n);
      if (lengths[x] > 1)
        break;
      if (lengths[x] == 1)
        ++g;
    }
    out.push_back({b.head, b.is_singleton(), g});
  }
  return out;
}

std::vector<int> maximal_heads(const std::vector<HeadProfile> &profiles, int *max_g = nullptr) {
  int best = -1;
  for (const auto &hp : profiles)
    best = std::max(best, hp.g);
  std::vector<int> out;
  for (const auto &hp : profiles) {
    if (hp.g != best)
      continue;
    if (hp.is_singleton)
      throw InvariantViolation("maximal-g head " + std::to_string(hp.head) + " is a singleton");
    out.push_back(hp.head);
  }
  if (max_g)
    *max_g = best;
  return out;
}

std::string dump_state(const APPartition &p, int m_prime, int start,
                       const std::vector<char> &covered, const std::vector<APBlock> &built) {
  std::ostringstream os;
  os << "input " << to_text(p) << ", m'=" << m_prime << ", start=" << start << ", built so far:";
  for (const auto &b : built)
    os << " (" << b.head << ':' << b.length << ')';
  os << ", covered:";
  for (int x = 1; x < static_cast<int>(covered.size()); ++x)
    if (covered[x])
      os << ' ' << x;
  return os.str();
}

} // namespace

std::vector<HeadProfile> head_profiles(const APPartition &p) {
  require_separable(p);
  return compute_profiles(p);
}

std::vector<int> starting_points(const APPartition &p) {
  require_separable(p);
  return maximal_heads(compute_profiles(p));
}

std::string SeparationTrace::to_string() const {
  std::ostringstream os;
  os << "start " << start << " (g=" << max_g << ")\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto &s = steps[i];
    os << "step " << i + 1 << ": head " << s.source_head << " len " << s.length << " -> head "
       << s.target_head << " (";
    for (std::size_t j = 0; j < s.elements.size(); ++j)
      os << (j ? "," : "") << s.elements[j];
    os << ")\n";
  }
  return os.str();
}

APPartition separate_from(const APPartition &p, int m_prime, int start, SeparationTrace *trace) {
  require_separable(p);
  if (m_prime < 1)
    throw PreconditionError("target difference must be positive");
  const auto t = type_of(p);
  if (!check_condition(t, p.difference, m_prime))
    throw PreconditionError("condition violated: type " + t.to_string() + " does not satisfy "
                            "ceil(k1/(k2+...+kr)) >= (max{m,m'}-1)(i_r-1) for m=" +
                            std::to_string(p.difference) + ", m'=" + std::to_string(m_prime));

  int max_g = 0;
  const auto starts = maximal_heads(compute_profiles(p), &max_g);
  if (std::find(starts.begin(), starts.end(), start) == starts.end())
    throw PreconditionError("start " + std::to_string(start) + " is not a maximal-g head");

  const long long pigeonhole =
      static_cast<long long>(std::max(p.difference, m_prime) - 1) * (t.largest() - 1);
  if (max_g < pigeonhole)
    throw InvariantViolation("maximal g " + std::to_string(max_g) + " below pigeonhole bound " +
                             std::to_string(pigeonhole) + " for " + to_text(p));

  const RelativeOrder order(start, p.n);
  std::vector<APBlock> source = p.blocks;
  std::sort(source.begin(), source.end(), [&](const APBlock &a, const APBlock &b) {
    return order.rank(a.head) < order.rank(b.head);
  });

  if (trace) {
    trace->start = start;
    trace->max_g = max_g;
    trace->steps.clear();
  }

  std::vector<char> covered(p.n + 1, 0);
  std::vector<APBlock> built;
  built.reserve(source.size());
  int cursor = 0; // rank of the smallest element that may still be uncovered
  int last_rank = -1;
  for (const auto &b : source) {
    while (cursor < p.n && covered[order.element_at(cursor)])
      ++cursor;
    if (cursor >= p.n)
      throw InvariantViolation("separation ran out of elements: " +
                               dump_state(p, m_prime, start, covered, built));
    const int head = order.element_at(cursor);
    if (cursor <= last_rank)
      throw InvariantViolation("generated heads out of order: " +
                               dump_state(p, m_prime, start, covered, built));
    last_rank = cursor;

    std::vector<int> elements;
    elements.reserve(b.length);
    for (int j = 0; j < b.length; ++j) {
      const int e = wrap(head + static_cast<long long>(j) * m_prime, p.n);
      if (covered[e])
        throw InvariantViolation("separation overlap at element " + std::to_string(e) + ": " +
                                 dump_state(p, m_prime, start, covered, built));
      covered[e] = 1;
      elements.push_back(e);
    }
    built.push_back({head, b.length});
    if (trace)
      trace->steps.push_back({b.head, b.length, head, std::move(elements)});
  }

  APPartition result(p.n, m_prime, std::move(built));
  if (auto v = validate_partition(result))
    throw InvariantViolation("separation produced an invalid partition (" + v->message +
                             ") from " + to_text(p));
  return result;
}

APPartition separate(const APPartition &p, int m_prime, SeparationTrace *trace) {
  require_separable(p);
  // Lowest-labelled maximal head; any other choice gives the same output.
  const int start = maximal_heads(compute_profiles(p)).front();
  return separate_from(p, m_prime, start, trace);
}

bool verify_roundtrip(const APPartition &p, int m_prime) {
  SeparationTrace forward;
  const APPartition image = separate(p, m_prime, &forward);
  const auto image_starts = starting_points(image);
  const bool start_kept = std::find(image_starts.begin(), image_starts.end(), forward.start) !=
                          image_starts.end();
  if (!start_kept)
    return false;
  // Inverse map anchored at the same starting point.
  if (separate_from(image, p.difference, forward.start) != p)
    return false;
  return separate(image, p.difference) == p;
}

} // namespace appart
