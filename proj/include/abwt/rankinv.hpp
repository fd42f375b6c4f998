#pragma once

// Rank-invertibility of an order spec: does the LF target of a row
// depend only on (Parikh vector, symbol, occurrence rank of that symbol
// in the last column)? Exactly the specs equivalent to the standard or
// the alternating order have this property; the checker finds concrete
// counterexamples for everything else by enumerating words in
// length-then-lexicographic order, and the predictor decides the
// property structurally.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/orders.hpp"
#include "abwt/reference.hpp"

namespace abwt {

struct RankInvWitness {
  std::string word1, word2;       // same Parikh vector, different LF target
  unsigned char symbol = 0;
  std::uint64_t occurrence = 0;   // 1-based occurrence rank in the last column
  std::size_t target1 = 0, target2 = 0;
  std::vector<std::uint64_t> parikh;  // counts per alphabet symbol, base order
};

struct Verdict {
  bool rank_invertible = true;
  std::optional<RankInvWitness> witness;
};

namespace detail {

struct LfEntry {
  std::uint32_t word_id;
  std::uint32_t target;
};

// Key: Parikh counts (one byte per alphabet symbol), the last-column
// symbol, and its occurrence rank. Word lengths are capped accordingly.
using LfKeyMap = std::map<std::string, LfEntry>;

inline std::optional<RankInvWitness> scan_word(const OrderSpec& spec,
                                               const std::string& w,
                                               std::uint32_t word_id,
                                               std::span<const std::string> words,
                                               LfKeyMap& seen) {
  const std::size_t n = w.size();
  const Alphabet& a = spec.alphabet();

  std::string parikh_bytes(a.size(), '\0');
  for (char ch : w) ++parikh_bytes[a.index_of(static_cast<unsigned char>(ch))];

  const std::vector<index_t> rows = rotation_order(w, spec);
  std::vector<std::uint32_t> row_of(n);
  for (std::size_t i = 0; i < n; ++i) row_of[rows[i]] = static_cast<std::uint32_t>(i);

  std::vector<std::uint8_t> occ(a.size(), 0);
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = rows[i];
    const unsigned char c = static_cast<unsigned char>(w[(start + n - 1) % n]);
    const std::uint32_t lf = row_of[(start + n - 1) % n];
    const std::uint8_t j = ++occ[a.index_of(c)];

    key.assign(parikh_bytes);
    key.push_back(static_cast<char>(c));
    key.push_back(static_cast<char>(j));
    const auto [it, inserted] = seen.emplace(key, LfEntry{word_id, lf});
    if (!inserted && it->second.target != lf) {
      RankInvWitness wit;
      wit.word1 = words[it->second.word_id];
      wit.word2 = w;
      wit.symbol = c;
      wit.occurrence = j;
      wit.target1 = it->second.target;
      wit.target2 = lf;
      for (char cnt : parikh_bytes)
        wit.parikh.push_back(static_cast<std::uint64_t>(static_cast<unsigned char>(cnt)));
      return wit;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Check an explicit word list: every word must be primitive and drawn
// from the spec's alphabet. The first conflicting LF key, if any, is
// reported with both words.
inline Verdict check_rank_invertible_words(const OrderSpec& spec,
                                           std::span<const std::string> words) {
  detail::LfKeyMap seen;
  for (std::uint32_t id = 0; id < words.size(); ++id) {
    const std::string& w = words[id];
    if (w.size() > 255)
      throw std::invalid_argument("rank invertibility: words longer than 255 unsupported");
    if (auto wit = detail::scan_word(spec, w, id, words, seen))
      return {false, std::move(wit)};
  }
  return {true, std::nullopt};
}

// Enumerate all primitive words over the spec's alphabet up to max_len,
// shorter first and lexicographic within a length, and stop at the first
// conflict.
inline Verdict check_rank_invertible(const OrderSpec& spec, std::size_t max_len) {
  if (max_len == 0 || max_len > 255)
    throw std::invalid_argument("rank invertibility: max_len must be in [1, 255]");
  const std::string& syms = spec.alphabet().symbols();
  detail::LfKeyMap seen;
  std::vector<std::string> words;  // grows as enumerated; witness refers into it
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> odo(len, 0);
    while (true) {
      std::string w(len, '\0');
      for (std::size_t i = 0; i < len; ++i) w[i] = syms[odo[i]];
      if (is_primitive(w)) {
        words.push_back(w);
        const std::uint32_t id = static_cast<std::uint32_t>(words.size() - 1);
        if (auto wit = detail::scan_word(spec, words.back(), id, words, seen))
          return {false, std::move(wit)};
      }
      std::size_t d = len;
      while (d > 0 && odo[d - 1] + 1 == syms.size()) odo[--d] = 0;
      if (d == 0) break;
      ++odo[d - 1];
    }
  }
  return {true, std::nullopt};
}

// Structural prediction: reduce the tuple to its smallest cyclic period
// and accept exactly the standard order (period 1) and the alternating
// order (period 2 with a full reversal in second position).
inline bool predict_rank_invertible(const OrderSpec& spec) {
  const std::size_t k = spec.k();
  std::size_t period = k;
  for (std::size_t p = 1; p < k; ++p) {
    if (k % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < k && ok; ++i) ok = spec.perms()[i] == spec.perms()[i % p];
    if (ok) {
      period = p;
      break;
    }
  }
  if (period == 1) return true;  // pi_0 is the identity by construction
  return period == 2 && spec.perms()[1].is_reverse();
}

}  // namespace abwt
