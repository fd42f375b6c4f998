#pragma once

// LF mappings: the row permutations that send row i of the sorted
// rotation matrix to the row holding its one-step right rotation.
// Under the standard order equal symbols keep their relative order
// between the last and first columns; under the alternating order they
// appear reversed, so the mapping subtracts the inclusive rank instead
// of adding the exclusive one.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "abwt/galois.hpp"
#include "abwt/orders.hpp"
#include "abwt/rankindex.hpp"

namespace abwt {

inline std::size_t lf_bwt(const RankIndex& ri, std::size_t i) {
  if (i >= ri.size()) throw std::out_of_range("lf_bwt: row out of range");
  const unsigned char c = static_cast<unsigned char>(ri.text()[i]);
  return ri.cum_lt(c) + ri.rank(c, static_cast<std::int64_t>(i) - 1);
}

inline std::size_t lf_abwt(const RankIndex& ri, std::size_t i) {
  if (i >= ri.size()) throw std::out_of_range("lf_abwt: row out of range");
  const unsigned char c = static_cast<unsigned char>(ri.text()[i]);
  return ri.cum_le(c) - ri.rank(c, static_cast<std::int64_t>(i) - 1) - 1;
}

enum class InverseMode { bwt, abwt };

// Linear-time inversion by walking the LF orbit from the input row and
// writing the word back to front. A valid image yields an orbit of
// period exactly n; anything shorter (or a walk that does not return to
// the start) is rejected.
inline std::string invert_fast(const TransformOutput& t, InverseMode mode) {
  const std::size_t n = t.last_column.size();
  if (n == 0) throw std::invalid_argument("invert_fast: empty transform");
  if (t.row_index >= n)
    throw std::invalid_argument("invert_fast: row index out of range");
  const RankIndex ri(t.last_column);
  std::string w(n, '\0');
  std::vector<bool> visited(n, false);
  std::size_t i = t.row_index;
  for (std::size_t j = 0; j < n; ++j) {
    if (visited[i])
      throw std::invalid_argument("invert_fast: input is not a transform image");
    visited[i] = true;
    w[n - 1 - j] = t.last_column[i];
    i = mode == InverseMode::bwt ? lf_bwt(ri, i) : lf_abwt(ri, i);
  }
  if (i != t.row_index)
    throw std::invalid_argument("invert_fast: input is not a transform image");
  // A full orbit under the alternating map can still reconstruct a
  // power (e.g. "aa"), which no transform produces.
  if (!is_primitive(w))
    throw std::invalid_argument("invert_fast: input is not a transform image");
  return w;
}

}  // namespace abwt
