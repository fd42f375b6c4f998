#pragma once

// Reference implementations of the BWT_K transform family: direct,
// small-n, obviously correct. The fast paths in the rest of the library
// are tested against these.

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/galois.hpp"
#include "abwt/orders.hpp"

namespace abwt {
namespace detail {

// Three-way comparison of the rotations starting at a and b under an
// order spec, scanning at most n symbols. Equal only for equal shifts
// of a primitive word.
inline std::strong_ordering cmp_rotations(const OrderSpec& spec, std::string_view w,
                                          std::size_t a, std::size_t b) {
  const std::size_t n = w.size();
  for (std::size_t t = 0; t < n; ++t) {
    const unsigned char ca = static_cast<unsigned char>(w[a]);
    const unsigned char cb = static_cast<unsigned char>(w[b]);
    if (ca != cb) {
      const Permutation& pi = spec.perm(t);
      return pi.rank(ca) < pi.rank(cb) ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    if (++a == n) a = 0;
    if (++b == n) b = 0;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

// Shifts of w in sorted rotation order. Requires a primitive word so
// that rows are pairwise distinct.
inline std::vector<index_t> rotation_order(std::string_view w, const OrderSpec& spec) {
  if (w.empty()) throw std::invalid_argument("rotation_order: empty word");
  if (!is_primitive(w))
    throw std::invalid_argument("rotation_order: word is not primitive");
  std::vector<index_t> rows(w.size());
  std::iota(rows.begin(), rows.end(), 0u);
  std::sort(rows.begin(), rows.end(), [&](index_t a, index_t b) {
    return detail::cmp_rotations(spec, w, a, b) == std::strong_ordering::less;
  });
  return rows;
}

// The sorted rotation matrix, rows materialized.
inline std::vector<std::string> rotation_matrix(std::string_view w,
                                                const OrderSpec& spec) {
  std::vector<std::string> rows;
  for (index_t shift : rotation_order(w, spec)) rows.push_back(rotate(w, shift));
  return rows;
}

// Transform by sorting all rotations. Quadratic-ish; the oracle.
inline TransformOutput bwt_k_naive(std::string_view w, const OrderSpec& spec) {
  const std::vector<index_t> rows = rotation_order(w, spec);
  const std::size_t n = w.size();
  TransformOutput out;
  out.last_column.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.last_column[i] = w[(rows[i] + n - 1) % n];
    if (rows[i] == 0) out.row_index = i;
  }
  return out;
}

// Inverts any BWT_K image by rebuilding the matrix column by column:
// prepend the last column to the sorted rows, re-sort, repeat. Cubic
// time and quadratic memory, guarded to n <= 2000. The result is
// re-transformed as a consistency check.
inline std::string invert_generic(const TransformOutput& t, const OrderSpec& spec) {
  const std::size_t n = t.last_column.size();
  if (n == 0) throw std::invalid_argument("invert_generic: empty transform");
  if (n > 2000) throw std::invalid_argument("invert_generic: guarded to n <= 2000");
  if (t.row_index >= n) throw std::invalid_argument("invert_generic: row index out of range");

  const auto less = [&](const std::string& a, const std::string& b) {
    return cmp_k(spec, a, b) == std::strong_ordering::less;
  };
  std::vector<std::string> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = std::string(1, t.last_column[i]);
  std::sort(rows.begin(), rows.end(), less);
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i < n; ++i)
      rows[i].insert(rows[i].begin(), t.last_column[i]);
    std::sort(rows.begin(), rows.end(), less);
  }
  const std::string w = rows[t.row_index];
  if (!is_primitive(w) || bwt_k_naive(w, spec) != t)
    throw std::invalid_argument("invert_generic: input is not a transform image");
  return w;
}

// Alternating-order suffix sort by direct comparison. The word must end
// with the unique 0x00 terminator.
inline std::vector<index_t> alt_suffix_sort_naive(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("alt_suffix_sort_naive: empty input");
  if (static_cast<unsigned char>(s.back()) != sentinel_byte)
    throw std::invalid_argument("alt_suffix_sort_naive: missing terminator");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (static_cast<unsigned char>(s[i]) == sentinel_byte)
      throw std::invalid_argument("alt_suffix_sort_naive: terminator must be unique");
  std::vector<index_t> sa(n);
  std::iota(sa.begin(), sa.end(), 0u);
  std::sort(sa.begin(), sa.end(), [&](index_t a, index_t b) {
    return cmp_alt(s.substr(a), s.substr(b)) == std::strong_ordering::less;
  });
  return sa;
}

}  // namespace abwt
