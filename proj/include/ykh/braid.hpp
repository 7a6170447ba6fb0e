#pragma once

// Classical braid words: parsing, printing, Markov moves and closure data.

#include <charconv>
#include <cstdlib>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ykh/error.hpp"

namespace ykh {

/// A word in the Artin generators of B_n. Letter k stands for sigma_|k|,
/// positive or inverse according to the sign of k.
class BraidWord {
 public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw MathError("braid must have at least one strand");
    for (int k : letters_) {
      if (k == 0 || std::abs(k) > strands_ - 1) {
        throw MathError("braid letter " + std::to_string(k) +
                        " is not a generator of B_" + std::to_string(strands_));
      }
    }
  }

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Parses an optionally signed decimal integer occupying the whole token.
inline std::optional<long long> parse_integer_token(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t start = 0;
  bool negative = false;
  if (tok[0] == '+' || tok[0] == '-') {
    negative = tok[0] == '-';
    start = 1;
  }
  if (start == tok.size()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + start, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return negative ? -value : value;
}

struct Token {
  std::string_view text;
  std::size_t position;
};

inline std::vector<Token> split_tokens(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.push_back({text.substr(i, j - i), offset + i});
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses "[n:] w" where w is a whitespace separated list of nonzero integers.
/// Without a header the strand count is 1 + max |letter|.
inline BraidWord parse_braid(std::string_view text) {
  std::optional<long long> header;
  std::string_view body = text;
  std::size_t body_offset = 0;

  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    if (auto second = text.find(':', colon + 1); second != std::string_view::npos) {
      throw ParseError("unexpected ':'", second);
    }
    auto head_tokens = detail::split_tokens(text.substr(0, colon), 0);
    if (head_tokens.size() != 1) {
      throw ParseError("strand header must be a single integer",
                       head_tokens.empty() ? colon : head_tokens[1 % head_tokens.size()].position);
    }
    auto value = detail::parse_integer_token(head_tokens[0].text);
    if (!value) throw ParseError("malformed strand header", head_tokens[0].position);
    if (*value <= 0) throw ParseError("strand header must be positive", head_tokens[0].position);
    if (*value > 1'000'000) throw ParseError("strand header too large", head_tokens[0].position);
    header = value;
    body = text.substr(colon + 1);
    body_offset = colon + 1;
  }

  std::vector<int> letters;
  long long max_abs = 0;
  for (const auto& tok : detail::split_tokens(body, body_offset)) {
    auto value = detail::parse_integer_token(tok.text);
    if (!value) throw ParseError("malformed braid letter '" + std::string(tok.text) + "'", tok.position);
    if (*value == 0) throw ParseError("braid letter 0 is not a generator", tok.position);
    long long magnitude = *value < 0 ? -*value : *value;
    if (magnitude > 1'000'000) throw ParseError("braid letter out of range", tok.position);
    if (header && magnitude > *header - 1) {
      throw ParseError("letter " + std::to_string(*value) + " exceeds strand count " +
                           std::to_string(*header),
                       tok.position);
    }
    max_abs = std::max(max_abs, magnitude);
    letters.push_back(static_cast<int>(*value));
  }
  int strands = header ? static_cast<int>(*header) : static_cast<int>(max_abs) + 1;
  return BraidWord(strands, std::move(letters));
}

/// Inverse of parse_braid; always emits the header so the identity round-trips.
inline std::string print_braid(const BraidWord& b) {
  std::string out = std::to_string(b.strands()) + ":";
  for (int k : b.letters()) out += " " + std::to_string(k);
  return out;
}

inline int exponent_sum(const BraidWord& b) {
  int sum = 0;
  for (int k : b.letters()) sum += k > 0 ? 1 : -1;
  return sum;
}

inline BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(b.strands(), std::move(letters));
}

inline BraidWord concatenate(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw MathError("strand count mismatch in braid product");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

/// The mirror image: every crossing switched.
inline BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& k : letters) k = -k;
  return BraidWord(b.strands(), std::move(letters));
}

/// w b w^-1.
inline BraidWord markov_conjugate(const BraidWord& b, const BraidWord& w) {
  if (b.strands() != w.strands()) throw MathError("conjugator has a different strand count");
  return concatenate(concatenate(w, b), inverse(w));
}

/// b sigma_n^{sign} in B_{n+1}.
inline BraidWord markov_stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw MathError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

/// Replaces the letter at `index` by sigma_i^{exponent} where i is the
/// generator index of that letter. Exponent 0 deletes the letter.
inline BraidWord replace_letter(const BraidWord& b, std::size_t index, int exponent) {
  if (index >= b.length()) throw MathError("crossing index out of range");
  int gen = std::abs(b.letters()[index]);
  std::vector<int> letters(b.letters().begin(), b.letters().begin() + static_cast<long>(index));
  int sign = exponent > 0 ? 1 : -1;
  for (int e = 0; e < std::abs(exponent); ++e) letters.push_back(sign * gen);
  letters.insert(letters.end(), b.letters().begin() + static_cast<long>(index) + 1, b.letters().end());
  return BraidWord(b.strands(), std::move(letters));
}

/// Underlying permutation in one-line notation (0-based): strand at position
/// j on top ends at position perm[j] at the bottom.
inline std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> where(static_cast<std::size_t>(b.strands()));
  for (int j = 0; j < b.strands(); ++j) where[static_cast<std::size_t>(j)] = j;
  std::vector<int> at(where);  // at[position] = strand
  for (int k : b.letters()) {
    int i = std::abs(k) - 1;
    std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i + 1)]);
  }
  for (int p = 0; p < b.strands(); ++p) where[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  return where;
}

/// Number of components of the closure.
inline int closure_component_count(const BraidWord& b) {
  auto perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

/// One line of a corpus file. Either `braid` is set or `error` explains why
/// the record was rejected.
struct CorpusRecord {
  std::size_t line = 0;
  std::string name;
  std::optional<BraidWord> braid;
  std::string error;
};

/// Reads `name;braidword` records. `#` starts a comment; blank lines are skipped.
inline std::vector<CorpusRecord> parse_corpus(std::istream& in) {
  std::vector<CorpusRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::split_tokens(line, 0).empty()) continue;

    CorpusRecord rec;
    rec.line = line_no;
    auto semi = line.find(';');
    if (semi == std::string_view::npos) {
      rec.error = "missing ';' separator";
      records.push_back(std::move(rec));
      continue;
    }
    auto name_tokens = detail::split_tokens(line.substr(0, semi), 0);
    for (std::size_t i = 0; i < name_tokens.size(); ++i) {
      if (i) rec.name += ' ';
      rec.name += name_tokens[i].text;
    }
    try {
      rec.braid = parse_braid(line.substr(semi + 1));
    } catch (const ParseError& e) {
      rec.error = e.what();
    } catch (const MathError& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace ykh
