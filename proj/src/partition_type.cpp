#include "appart/partition_type.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "appart/errors.hpp"

namespace appart {

PartitionType::PartitionType(std::vector<TypePart> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].size < 1)
      throw PreconditionError("type sizes must be positive");
    if (parts_[i].multiplicity < 1)
      throw PreconditionError("type multiplicities must be positive");
    if (i > 0 && parts_[i].size <= parts_[i - 1].size)
      throw PreconditionError("type sizes must be strictly increasing");
  }
}

PartitionType PartitionType::from_sizes(const std::vector<int> &sizes) {
  std::map<int, int> counts;
  for (int s : sizes)
    ++counts[s];
  std::vector<TypePart> parts;
  parts.reserve(counts.size());
  for (auto [size, mult] : counts)
    parts.push_back({size, mult});
  return PartitionType(std::move(parts));
}

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw PreconditionError("malformed type '" + std::string(whole) + "'");
  if (value < 1)
    throw PreconditionError("type '" + std::string(whole) +
                            "' has a non-positive size or multiplicity");
  return value;
}

} // namespace

PartitionType PartitionType::parse(std::string_view text) {
  std::vector<TypePart> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view term = text.substr(pos, comma - pos);
    std::size_t caret = term.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back({parse_positive(term, text), 1});
    } else {
      parts.push_back({parse_positive(term.substr(0, caret), text),
                       parse_positive(term.substr(caret + 1), text)});
    }
    pos = comma + 1;
  }
  return PartitionType(std::move(parts));
}

int PartitionType::weight() const {
  int w = 0;
  for (const auto &p : parts_)
    w += p.size * p.multiplicity;
  return w;
}

int PartitionType::block_count() const {
  int c = 0;
  for (const auto &p : parts_)
    c += p.multiplicity;
  return c;
}

int PartitionType::singletons() const {
  return (!parts_.empty() && parts_.front().size == 1) ? parts_.front().multiplicity : 0;
}

int PartitionType::largest() const { return parts_.empty() ? 0 : parts_.back().size; }

int PartitionType::non_singleton_blocks() const { return block_count() - singletons(); }

std::vector<int> PartitionType::sizes() const {
  std::vector<int> out;
  for (const auto &p : parts_)
    out.insert(out.end(), p.multiplicity, p.size);
  return out;
}

bool PartitionType::has_singletons_and_blocks() const {
  return parts_.size() >= 2 && parts_.front().size == 1;
}

std::string PartitionType::to_string() const {
  std::string out;
  for (const auto &p : parts_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(p.size) + '^' + std::to_string(p.multiplicity);
  }
  return out;
}

std::vector<PartitionType> all_types(int weight) {
  std::vector<PartitionType> out;
  if (weight < 1)
    return out;
  // Parts in non-decreasing order, so each integer partition appears once.
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.push_back(PartitionType::from_sizes(current));
      return;
    }
    for (int s = min_part; s <= remaining; ++s) {
      current.push_back(s);
      recurse(remaining - s, s);
      current.pop_back();
    }
  };
  recurse(weight, 1);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace appart
