#include "appart/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <nlohmann/json.hpp>

#include "appart/errors.hpp"

namespace appart {

std::string to_text(const APPartition &p) {
  std::string out = "n=" + std::to_string(p.n) + " m=" + std::to_string(p.difference) + " blocks=";
  for (const auto &b : p.blocks)
    out += '(' + std::to_string(b.head) + ':' + std::to_string(b.length) + ')';
  return out;
}

std::string to_json(const APPartition &p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["m"] = p.difference;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto &b : p.blocks)
    j["blocks"].push_back({{"head", b.head}, {"len", b.length}});
  return j.dump();
}

std::string to_sequences(const APPartition &p) {
  std::string out;
  for (const auto &b : p.blocks) {
    if (!out.empty())
      out += ',';
    out += '(';
    auto seq = block_sequence(b, p.n, p.difference);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(seq[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

ParseResult finish(int n, int m, std::vector<APBlock> blocks, bool normalize) {
  bool sorted = std::is_sorted(blocks.begin(), blocks.end(),
                               [](const APBlock &a, const APBlock &b) { return a.head < b.head; });
  if (!sorted && !normalize)
    throw PreconditionError("blocks are not in increasing head order; "
                            "re-run with normalization to sort them");
  ParseResult r{APPartition(n, m, std::move(blocks)), !sorted};
  return r;
}

class TextCursor {
public:
  explicit TextCursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(std::string_view lit) {
    skip_space();
    if (s_.substr(pos_, lit.size()) != lit)
      fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc())
      fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw PreconditionError("partition text, column " + std::to_string(pos_ + 1) + ": " + what);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

ParseResult parse_text(std::string_view text, bool normalize) {
  TextCursor cur(text);
  cur.expect("n=");
  int n = cur.integer();
  cur.expect("m=");
  int m = cur.integer();
  cur.expect("blocks=");
  std::vector<APBlock> blocks;
  while (cur.peek('(')) {
    cur.expect("(");
    int head = cur.integer();
    cur.expect(":");
    int len = cur.integer();
    cur.expect(")");
    blocks.push_back({head, len});
  }
  if (!cur.at_end())
    cur.fail("trailing characters");
  return finish(n, m, std::move(blocks), normalize);
}

ParseResult parse_json(std::string_view text, bool normalize) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw PreconditionError(std::string("partition json: ") + e.what());
  }
  auto exact_int = [](const nlohmann::json &v, const char *field) {
    if (!v.is_number_integer())
      throw PreconditionError(std::string("partition json: '") + field +
                              "' must be an exact integer");
    return v.get<int>();
  };
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("blocks") ||
      !j["blocks"].is_array())
    throw PreconditionError("partition json: expected an object with n, m and blocks");
  std::vector<APBlock> blocks;
  for (const auto &b : j["blocks"]) {
    if (!b.is_object() || !b.contains("head") || !b.contains("len"))
      throw PreconditionError("partition json: each block needs head and len");
    blocks.push_back({exact_int(b["head"], "head"), exact_int(b["len"], "len")});
  }
  return finish(exact_int(j["n"], "n"), exact_int(j["m"], "m"), std::move(blocks), normalize);
}

ParseResult parse_any(std::string_view text, bool normalize) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json(text, normalize);
  return parse_text(text, normalize);
}

} // namespace appart
