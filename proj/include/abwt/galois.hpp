#pragma once

// Galois words: the alternating-order analogue of Lyndon words. A
// primitive word is Galois when it is strictly least among its rotations
// under cmp_alt. find_galois_rotation locates that rotation in linear
// time with a Booth-style scan driven by a border array, and the
// sentinel-free transform rotates to it first so that appending a
// terminator does not disturb the rotation order.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/dcsort.hpp"
#include "abwt/orders.hpp"

namespace abwt {

// B[j] is the length of the longest proper border of w[0..j); B[0] = -1.
inline std::vector<std::int32_t> border_array(std::string_view w) {
  const std::size_t n = w.size();
  std::vector<std::int32_t> B(n + 1);
  B[0] = -1;
  std::int32_t b = -1;
  for (std::size_t j = 1; j <= n; ++j) {
    while (b >= 0 && w[b] != w[j - 1]) b = B[b];
    ++b;
    B[j] = b;
  }
  return B;
}

inline bool is_primitive(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  const std::vector<std::int32_t> B = border_array(w);
  const std::size_t p = n - static_cast<std::size_t>(B[n]);
  return p == n || n % p != 0;
}

namespace detail {

// cmp_alt of the rotations starting at a and b, scanning at most n
// symbols.
inline std::strong_ordering cmp_alt_rotations(std::string_view w, std::size_t a,
                                              std::size_t b) {
  const std::size_t n = w.size();
  for (std::size_t t = 0; t < n; ++t) {
    const unsigned char ca = static_cast<unsigned char>(w[a]);
    const unsigned char cb = static_cast<unsigned char>(w[b]);
    if (ca != cb) {
      const bool a_first = (t % 2 == 0) ? ca < cb : ca > cb;
      return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (++a == n) a = 0;
    if (++b == n) b = 0;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

struct GaloisRotation {
  std::size_t shift = 0;          // rotate(w, shift) is the Galois conjugate
  std::uint64_t comparisons = 0;  // symbol comparisons spent (at most 4n-3)
};

// Least rotation under the alternating order, for a primitive word.
// Mismatches at even matched length shift the candidate when the new
// symbol is smaller, at odd matched length when it is larger; otherwise
// the scan falls back along the border array.
inline GaloisRotation find_galois_rotation(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("find_galois_rotation: empty word");
  if (!is_primitive(w))
    throw std::invalid_argument("find_galois_rotation: word is not primitive");

  std::vector<std::int64_t> B(n + 1);
  std::int64_t i = 0;
  std::size_t j = 1, k = 0;
  std::uint64_t comparisons = 0;
  B[0] = -1;
  while (k + j < 2 * n) {
    if (j <= n) B[j] = i;
    while (i >= 0) {
      const unsigned char cj = static_cast<unsigned char>(w[(k + j) % n]);
      const unsigned char ci =
          static_cast<unsigned char>(w[(k + static_cast<std::size_t>(i)) % n]);
      ++comparisons;
      if (cj == ci) break;
      if (i % 2 == 0) {
        if (cj < ci) {
          k += j - static_cast<std::size_t>(i);
          j = static_cast<std::size_t>(i);
        }
      } else {
        if (cj > ci) {
          k += j - static_cast<std::size_t>(i);
          j = static_cast<std::size_t>(i);
        }
      }
      i = B[i];
    }
    ++i;
    ++j;
  }
  if (k >= n) throw std::logic_error("find_galois_rotation: shift out of range");
  return {k, comparisons};
}

// True iff w is primitive and strictly least among its rotations under
// the alternating order.
inline bool is_galois(std::string_view w) {
  if (!is_primitive(w)) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r)
    if (detail::cmp_alt_rotations(w, 0, r) != std::strong_ordering::less)
      return false;
  return true;
}

// Equivalent characterization: w is primitive and alt-smaller than every
// proper suffix of itself (the prefix parity rule of cmp_alt does real
// work here). Must agree with is_galois on every word.
inline bool is_galois_by_suffixes(std::string_view w) {
  if (!is_primitive(w)) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (cmp_alt(w, w.substr(i)) != std::strong_ordering::less) return false;
  return true;
}

// Alternating transform of a word that carries no terminator: rotate to
// the Galois conjugate, terminate, sort suffixes, and read the last
// column off the first n proper rows. The row of the original word is
// recovered from its shift.
inline TransformOutput abwt_sentinel_free(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("abwt_sentinel_free: empty word");
  for (char ch : w)
    if (static_cast<unsigned char>(ch) == sentinel_byte)
      throw std::invalid_argument("abwt_sentinel_free: word contains the reserved terminator byte");

  const GaloisRotation g = find_galois_rotation(w);
  const std::string conj = rotate(w, g.shift);
  std::string s(conj);
  s.push_back(static_cast<char>(sentinel_byte));
  const std::vector<index_t> sa = alt_suffix_array_dc(s);
  if (sa.empty() || sa[0] != n)
    throw std::logic_error("abwt_sentinel_free: unexpected suffix order");

  TransformOutput out;
  out.last_column.resize(n);
  const std::size_t want = (n - g.shift) % n;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t p = sa[i];
    out.last_column[i - 1] = conj[(p + n - 1) % n];
    if (p == want) out.row_index = i - 1;
  }
  return out;
}

}  // namespace abwt
