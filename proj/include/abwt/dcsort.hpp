#pragma once

// Alternating-order suffix sorting with a difference cover, and the
// fast transform built on it. Input words end with the unique 0x00
// terminator, which makes suffix order and rotation order coincide.
//
// Outline: sample the positions whose residue mod v lies in the cover D,
// rank their v-tuples under the alternating order by LSD radix (byte
// order flipped at odd offsets), suffix-sort the rank string under the
// standard order, sort each non-sampled residue class by radix down to a
// sampled rank, and merge everything with at most v direct symbol
// comparisons per pair, flipping the final rank comparison when the
// shift is odd. v must be even so that tuple boundaries preserve
// position parity.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/orders.hpp"
#include "abwt/sais.hpp"

namespace abwt {

// Residues mod v whose pairwise differences reach every residue class.
struct DifferenceCover {
  std::uint32_t v = 0;
  std::vector<std::uint32_t> d;
};

// True iff every residue mod v is a difference of two cover elements
// (and the elements themselves are valid residues).
inline bool verify_cover(const DifferenceCover& cover) {
  if (cover.v == 0 || cover.d.empty()) return false;
  for (std::uint32_t a : cover.d)
    if (a >= cover.v) return false;
  std::vector<bool> hit(cover.v, false);
  for (std::uint32_t a : cover.d)
    for (std::uint32_t b : cover.d) hit[(a + cover.v - b) % cover.v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

namespace detail {

inline bool cover_search(std::uint32_t v, std::size_t size, std::uint32_t next,
                         std::vector<std::uint32_t>& d) {
  if (d.size() == size)
    return verify_cover(DifferenceCover{v, d});
  for (std::uint32_t x = next; x <= v - (size - d.size()); ++x) {
    d.push_back(x);
    if (cover_search(v, size, x + 1, d)) return true;
    d.pop_back();
  }
  return false;
}

}  // namespace detail

// Builds a difference cover mod v (v even, v <= 64). Small sizes come
// from a fixed table; up to v = 32 an exact search returns the
// lexicographically least cover of minimum size; beyond that a greedy
// cover is produced and certified.
inline DifferenceCover gen_cover(std::uint32_t v) {
  switch (v) {
    case 2: return {2, {0, 1}};
    case 4: return {4, {0, 1, 2}};
    case 6: return {6, {0, 1, 3}};
    case 8: return {8, {0, 1, 2, 4}};
    case 12: return {12, {0, 1, 3, 7}};
    default: break;
  }
  if (v == 0 || v % 2 != 0)
    throw std::invalid_argument("gen_cover: v must be even and positive");
  if (v > 64) throw std::invalid_argument("gen_cover: v above 64 not supported");

  if (v <= 32) {
    for (std::size_t size = 1; size <= v; ++size) {
      std::vector<std::uint32_t> d{0};
      if (detail::cover_search(v, size, 1, d)) return {v, d};
    }
    throw std::logic_error("gen_cover: search failed");  // unreachable, {0..v-1} covers
  }

  DifferenceCover dc{v, {0}};
  std::vector<bool> hit(v, false);
  hit[0] = true;
  std::uint32_t covered = 1;
  while (covered < v) {
    std::uint32_t best = 0, best_gain = 0;
    for (std::uint32_t x = 1; x < v; ++x) {
      std::uint32_t gain = 0;
      for (std::uint32_t b : dc.d) {
        if (!hit[(x + v - b) % v]) ++gain;
        if (!hit[(b + v - x) % v]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    for (std::uint32_t b : dc.d) {
      const std::uint32_t d1 = (best + v - b) % v, d2 = (b + v - best) % v;
      if (!hit[d1]) { hit[d1] = true; ++covered; }
      if (!hit[d2]) { hit[d2] = true; ++covered; }
    }
    dc.d.push_back(best);
  }
  std::sort(dc.d.begin(), dc.d.end());
  if (!verify_cover(dc)) throw std::logic_error("gen_cover: greedy cover invalid");
  return dc;
}

inline DifferenceCover default_cover() { return {6, {0, 1, 3}}; }

// Intermediates of the sampled stage, exposed for inspection and tests.
struct DcTrace {
  std::vector<index_t> sample_positions;   // cover classes ascending, positions ascending
  std::vector<std::uint32_t> tuple_ranks;  // alternating rank of each sampled v-tuple
  std::vector<index_t> rank_sa;            // standard suffix array of tuple_ranks
};

// Suffix array of a sentinel-terminated word under the alternating
// order.
inline std::vector<index_t> alt_suffix_array_dc(std::string_view s,
                                                const DifferenceCover& cover,
                                                DcTrace* trace = nullptr) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("alt_suffix_array_dc: empty input");
  if (static_cast<unsigned char>(s.back()) != sentinel_byte)
    throw std::invalid_argument("alt_suffix_array_dc: missing terminator");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (static_cast<unsigned char>(s[i]) == sentinel_byte)
      throw std::invalid_argument("alt_suffix_array_dc: terminator must be unique");
  if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()) / 2)
    throw std::invalid_argument("alt_suffix_array_dc: input too large");
  if (cover.v < 2 || cover.v % 2 != 0 || !verify_cover(cover))
    throw std::invalid_argument("alt_suffix_array_dc: invalid difference cover");

  const std::uint32_t v = cover.v;
  std::vector<std::uint32_t> D(cover.d);
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  std::vector<bool> in_cover(v, false);
  for (std::uint32_t d : D) in_cover[d] = true;

  const auto char_at = [&](std::size_t p) -> unsigned char {
    return p < n ? static_cast<unsigned char>(s[p]) : 0;
  };

  // Sampled positions, grouped by cover class. A position's slot in this
  // layout is recoverable arithmetically, so the radix passes can run on
  // positions directly.
  std::vector<index_t> pos;
  std::vector<std::size_t> class_base(v, 0);
  for (std::uint32_t d : D) {
    class_base[d] = pos.size();
    for (std::size_t p = d; p < n; p += v) pos.push_back(static_cast<index_t>(p));
  }
  const std::size_t m = pos.size();
  const auto slot_of = [&](index_t p) -> std::size_t {
    const std::uint32_t c = p % v;
    return class_base[c] + (static_cast<std::size_t>(p) - c) / v;
  };

  std::vector<std::uint32_t> cnt(257);
  const auto counting_pass = [&](std::vector<index_t>& items, std::size_t off) {
    const bool desc = (off % 2 == 1);
    const auto key = [&](index_t p) -> unsigned {
      const unsigned char c = char_at(static_cast<std::size_t>(p) + off);
      return desc ? 255u - c : c;
    };
    std::fill(cnt.begin(), cnt.end(), 0u);
    for (index_t p : items) ++cnt[key(p) + 1];
    for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
    static thread_local std::vector<index_t> scratch;
    scratch.resize(items.size());
    for (index_t p : items) scratch[cnt[key(p)]++] = p;
    items.swap(scratch);
  };

  // Stable LSD radix over the tuple offsets, flipping byte order at odd
  // offsets. After the offset-0 pass the positions are in alternating
  // tuple order.
  std::vector<index_t> items(pos);
  for (std::size_t off = v; off-- > 0;) counting_pass(items, off);

  // Collapse equal tuples onto one rank.
  const auto tuples_equal = [&](index_t a, index_t b) {
    for (std::uint32_t off = 0; off < v; ++off)
      if (char_at(static_cast<std::size_t>(a) + off) !=
          char_at(static_cast<std::size_t>(b) + off))
        return false;
    return true;
  };
  std::vector<std::uint32_t> tuple_rank(m);
  std::uint32_t ranks = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && !tuples_equal(items[i - 1], items[i])) ++ranks;
    tuple_rank[slot_of(items[i])] = ranks;
  }

  // Standard suffix sort of the rank string orders the sampled suffixes:
  // chunking a suffix into v-tuples keeps per-position parity because v
  // is even, and every cover class ends in a tuple containing the
  // terminator, so comparisons resolve before leaving a class run.
  std::vector<std::int32_t> rs(m + 1);
  for (std::size_t t = 0; t < m; ++t) rs[t] = static_cast<std::int32_t>(tuple_rank[t]) + 1;
  rs[m] = 0;
  const std::vector<index_t> sub = suffix_array_lex(rs, static_cast<std::int32_t>(ranks) + 2);

  std::vector<index_t> sorted_sample;
  sorted_sample.reserve(m);
  for (index_t slot : sub)
    if (slot != m) sorted_sample.push_back(pos[slot]);

  if (trace) {
    trace->sample_positions = pos;
    trace->tuple_ranks = tuple_rank;
    trace->rank_sa.clear();
    for (index_t slot : sub)
      if (slot != m) trace->rank_sa.push_back(slot);
  }

  constexpr std::uint32_t kNoRank = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> srank(n, kNoRank);
  for (std::size_t j = 0; j < sorted_sample.size(); ++j)
    srank[sorted_sample[j]] = static_cast<std::uint32_t>(j);

  // Each non-sampled class: seed by the sampled rank delta places ahead
  // (reversed when delta is odd; the at most one beyond-end suffix keys
  // below every rank and the character passes separate it anyway), then
  // radix the first delta symbols. Packing rank and source index into
  // one word keeps the seed sort free of gathers.
  std::vector<std::vector<index_t>> class_lists;
  for (std::uint32_t c = 0; c < v; ++c) {
    if (in_cover[c]) continue;
    std::vector<index_t> ps;
    for (std::size_t p = c; p < n; p += v) ps.push_back(static_cast<index_t>(p));
    if (ps.empty()) continue;
    std::uint32_t delta = 0;
    for (std::uint32_t k = 1; k < v; ++k)
      if (in_cover[(c + k) % v]) { delta = k; break; }
    const bool desc = (delta % 2 == 1);
    std::vector<std::uint64_t> keyed(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::size_t q = static_cast<std::size_t>(ps[i]) + delta;
      std::uint64_t key = q < n ? static_cast<std::uint64_t>(srank[q]) + 1 : 0;
      if (desc) key = static_cast<std::uint64_t>(m) + 1 - key;
      keyed[i] = (key << 32) | i;
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<index_t> seeded(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      seeded[i] = ps[keyed[i] & 0xffffffffu];
    ps.swap(seeded);
    for (std::size_t off = delta; off-- > 0;) counting_pass(ps, off);
    class_lists.push_back(std::move(ps));
  }

  // shift[a*v+b]: least k making both classes sampled after k steps.
  std::vector<std::uint32_t> shift(static_cast<std::size_t>(v) * v, kNoRank);
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = 0; b < v; ++b)
      for (std::uint32_t k = 0; k < v; ++k)
        if (in_cover[(a + k) % v] && in_cover[(b + k) % v]) {
          shift[a * v + b] = k;
          break;
        }

  const auto suffix_less = [&](index_t p, index_t q) -> bool {
    const std::uint32_t k = shift[(p % v) * v + (q % v)];
    for (std::uint32_t t = 0; t < k; ++t) {
      const unsigned char a = char_at(static_cast<std::size_t>(p) + t);
      const unsigned char b = char_at(static_cast<std::size_t>(q) + t);
      if (a != b) return (t % 2 == 0) ? a < b : a > b;
    }
    // Equality through k-1 steps means neither side touched the
    // terminator, so both shifted positions are in range and sampled.
    const std::uint32_t ra = srank[p + k], rb = srank[q + k];
    return (k % 2 == 0) ? ra < rb : ra > rb;
  };

  // Merge smallest pair first, keeping total element moves near the
  // k-way optimum.
  std::vector<std::vector<index_t>> lists;
  lists.push_back(std::move(sorted_sample));
  for (std::vector<index_t>& cls : class_lists) lists.push_back(std::move(cls));
  while (lists.size() > 1) {
    std::sort(lists.begin(), lists.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<index_t> merged(lists[0].size() + lists[1].size());
    std::merge(lists[0].begin(), lists[0].end(), lists[1].begin(), lists[1].end(),
               merged.begin(), suffix_less);
    lists.erase(lists.begin());
    lists.front() = std::move(merged);
  }
  return std::move(lists.front());
}

inline std::vector<index_t> alt_suffix_array_dc(std::string_view s) {
  return alt_suffix_array_dc(s, default_cover());
}

// Transform from a precomputed alternating suffix order of a
// sentinel-terminated word.
inline TransformOutput abwt_from_suffixes(std::string_view s,
                                          const std::vector<index_t>& sa) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("abwt_from_suffixes: empty input");
  if (sa.size() != n)
    throw std::invalid_argument("abwt_from_suffixes: suffix array size mismatch");
  TransformOutput out;
  out.last_column.resize(n);
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = sa[i];
    if (p >= n) throw std::invalid_argument("abwt_from_suffixes: index out of range");
    out.last_column[i] = s[(p + n - 1) % n];
    if (p == 0) {
      out.row_index = i;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("abwt_from_suffixes: not a permutation");
  return out;
}

// Fast alternating transform of a sentinel-terminated word.
inline TransformOutput abwt_fast(std::string_view s) {
  return abwt_from_suffixes(s, alt_suffix_array_dc(s));
}

}  // namespace abwt
