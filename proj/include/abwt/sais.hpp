#pragma once

// Linear-time suffix array construction by induced sorting (SA-IS),
// for integer sequences under the standard lexicographic order.
//
// Contract: the input ends with a 0 that appears nowhere else and all
// values lie in [0, sigma). This is the classic formulation; callers
// that need a terminator append one themselves.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abwt/orders.hpp"

namespace abwt {
namespace detail {

inline void sais_rec(const std::int32_t* s, std::int32_t* sa, std::int32_t n,
                     std::int32_t sigma) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  // Suffix types: S when strictly smaller than the next suffix.
  std::vector<bool> stype(static_cast<std::size_t>(n));
  stype[n - 1] = true;
  for (std::int32_t i = n - 2; i >= 0; --i)
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<std::int32_t> bucket(static_cast<std::size_t>(sigma), 0);
  for (std::int32_t i = 0; i < n; ++i) ++bucket[s[i]];
  std::vector<std::int32_t> heads(sigma), tails(sigma);
  auto reset_bounds = [&] {
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < sigma; ++c) {
      heads[c] = sum;
      sum += bucket[c];
      tails[c] = sum;  // one past the end
    }
  };

  // One full induction round: seed the LMS suffixes at bucket tails in
  // the order given (last element of lms placed deepest), then induce
  // L-type entries left to right and S-type entries right to left.
  auto induce = [&](const std::vector<std::int32_t>& lms) {
    for (std::int32_t i = 0; i < n; ++i) sa[i] = -1;
    reset_bounds();
    for (std::size_t t = lms.size(); t-- > 0;) {
      const std::int32_t p = lms[t];
      sa[--tails[s[p]]] = p;
    }
    reset_bounds();
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int32_t j = sa[i] - 1;
      if (sa[i] > 0 && !stype[j]) sa[heads[s[j]]++] = j;
    }
    reset_bounds();
    for (std::int32_t i = n - 1; i >= 0; --i) {
      const std::int32_t j = sa[i] - 1;
      if (sa[i] > 0 && stype[j]) sa[--tails[s[j]]] = j;
    }
  };

  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  // The terminator is always LMS for n >= 2, so lms is never empty here.
  const std::int32_t n1 = static_cast<std::int32_t>(lms.size());
  induce(lms);

  // Name the LMS substrings in their now-sorted order. Two substrings
  // are equal iff their symbols match up to and including the next LMS
  // boundary on both sides.
  auto lms_equal = [&](std::int32_t a, std::int32_t b) {
    if (s[a] != s[b]) return false;
    for (std::int32_t d = 1;; ++d) {
      const bool la = is_lms(a + d), lb = is_lms(b + d);
      if (la && lb) return true;
      if (la != lb) return false;
      if (s[a + d] != s[b + d]) return false;
    }
  };

  std::vector<std::int32_t> name_of(static_cast<std::size_t>(n), -1);
  std::int32_t names = 0;
  std::int32_t prev = -1;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t p = sa[i];
    if (!is_lms(p)) continue;
    if (prev >= 0 && !lms_equal(prev, p)) ++names;
    name_of[p] = names;
    prev = p;
  }

  // Sub-problem: the named LMS sequence, in text order.
  std::vector<std::int32_t> s1(static_cast<std::size_t>(n1));
  for (std::int32_t t = 0; t < n1; ++t) s1[t] = name_of[lms[t]];
  std::vector<std::int32_t> sa1(static_cast<std::size_t>(n1));
  if (names + 1 == n1) {
    for (std::int32_t t = 0; t < n1; ++t) sa1[s1[t]] = t;
  } else {
    sais_rec(s1.data(), sa1.data(), n1, names + 1);
  }

  std::vector<std::int32_t> lms_sorted(static_cast<std::size_t>(n1));
  for (std::int32_t t = 0; t < n1; ++t) lms_sorted[t] = lms[sa1[t]];
  induce(lms_sorted);
}

}  // namespace detail

// Suffix array of an integer sequence ending in its unique minimum 0.
// sigma bounds the values (all in [0, sigma)).
inline std::vector<index_t> suffix_array_lex(const std::vector<std::int32_t>& s,
                                             std::int32_t sigma) {
  if (s.empty()) throw std::invalid_argument("suffix_array_lex: empty input");
  if (s.back() != 0)
    throw std::invalid_argument("suffix_array_lex: input must end with 0");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= sigma)
      throw std::invalid_argument("suffix_array_lex: value out of range");
    if (s[i] == 0 && i + 1 != s.size())
      throw std::invalid_argument("suffix_array_lex: 0 must be unique and terminal");
  }
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> sa(static_cast<std::size_t>(n));
  detail::sais_rec(s.data(), sa.data(), n, sigma);
  return std::vector<index_t>(sa.begin(), sa.end());
}

}  // namespace abwt
