#pragma once

// Symbol orders for the BWT_K transform family.
//
// Words are byte strings. The base order on symbols is ascending byte
// value, and the reserved terminator byte 0x00 (written '$' in the docs)
// is minimal in it. A transform order is a nonempty tuple of alphabet
// permutations (pi_0, ..., pi_{k-1}) with pi_0 the identity; comparing
// two words resolves position i under pi_{i mod k}.
//
// The alternating order (id, rev, id, rev, ...) gets a dedicated byte
// comparator, cmp_alt, which is total: when one word is a proper prefix
// of the other, the shorter word comes first exactly when its length is
// even.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abwt {

using index_t = std::uint32_t;

inline constexpr unsigned char sentinel_byte = 0;

// Result of a transform: the last matrix column and the row holding the
// input word.
struct TransformOutput {
  std::string last_column;
  std::size_t row_index = 0;

  friend bool operator==(const TransformOutput&, const TransformOutput&) = default;
};

// The distinct symbols of a word, in ascending byte order.
class Alphabet {
public:
  Alphabet() { idx_.fill(-1); }

  static Alphabet from_word(std::string_view w, bool add_sentinel = false) {
    std::array<bool, 256> seen{};
    for (char ch : w) seen[static_cast<unsigned char>(ch)] = true;
    if (add_sentinel) seen[sentinel_byte] = true;
    Alphabet a;
    for (int c = 0; c < 256; ++c)
      if (seen[c]) a.syms_.push_back(static_cast<char>(c));
    a.build_index();
    return a;
  }

  // Explicit symbol set; must be strictly increasing bytes.
  static Alphabet from_symbols(std::string_view symbols) {
    for (std::size_t i = 1; i < symbols.size(); ++i)
      if (static_cast<unsigned char>(symbols[i - 1]) >=
          static_cast<unsigned char>(symbols[i]))
        throw std::invalid_argument("alphabet: symbols must be strictly increasing");
    Alphabet a;
    a.syms_.assign(symbols.begin(), symbols.end());
    a.build_index();
    return a;
  }

  std::size_t size() const { return syms_.size(); }
  const std::string& symbols() const { return syms_; }
  bool contains(unsigned char c) const { return idx_[c] >= 0; }
  bool has_sentinel() const { return contains(sentinel_byte); }

  // Rank of a symbol in the base order.
  std::size_t index_of(unsigned char c) const {
    if (idx_[c] < 0) throw std::invalid_argument("alphabet: unknown symbol");
    return static_cast<std::size_t>(idx_[c]);
  }

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.syms_ == y.syms_;
  }

private:
  void build_index() {
    idx_.fill(-1);
    for (std::size_t i = 0; i < syms_.size(); ++i)
      idx_[static_cast<unsigned char>(syms_[i])] = static_cast<std::int16_t>(i);
  }

  std::string syms_;
  std::array<std::int16_t, 256> idx_;
};

// A permutation of an alphabet, stored as the rearranged symbol order.
// rank(c) is the position of c in that order; comparators consult ranks
// only. Text form: "id", "rev", or the non-sentinel symbols listed in
// their permuted order (e.g. "cab" puts c before a before b); a sentinel
// present in the alphabet keeps rank 0 in the explicit form, while "rev"
// reverses the full sentinel-extended order, making the sentinel maximal.
class Permutation {
public:
  static Permutation identity(const Alphabet& a) { return Permutation(a, a.symbols()); }

  static Permutation reverse(const Alphabet& a) {
    std::string order(a.symbols());
    std::reverse(order.begin(), order.end());
    return Permutation(a, std::move(order));
  }

  static Permutation from_order(const Alphabet& a, std::string_view symbol_order) {
    return Permutation(a, std::string(symbol_order));
  }

  static Permutation parse(const Alphabet& a, std::string_view text) {
    if (text == "id") return identity(a);
    if (text == "rev") return reverse(a);
    std::string order;
    if (a.has_sentinel()) order.push_back(static_cast<char>(sentinel_byte));
    order.append(text);
    return Permutation(a, std::move(order));
  }

  int rank(unsigned char c) const {
    const int r = rank_[c];
    if (r < 0) throw std::invalid_argument("permutation: unknown symbol");
    return r;
  }

  bool is_identity() const { return identity_; }
  bool is_reverse() const { return reverse_; }
  std::size_t size() const { return order_.size(); }
  const std::string& symbol_order() const { return order_; }

  std::string to_text() const {
    if (identity_) return "id";
    if (reverse_) return "rev";
    std::string t;
    for (char ch : order_)
      if (static_cast<unsigned char>(ch) != sentinel_byte) t.push_back(ch);
    return t;
  }

  friend bool operator==(const Permutation& x, const Permutation& y) {
    return x.order_ == y.order_;
  }

private:
  Permutation(const Alphabet& a, std::string order) : order_(std::move(order)) {
    if (order_.size() != a.size())
      throw std::invalid_argument("permutation: must cover the alphabet exactly once");
    rank_.fill(-1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const unsigned char c = order_[i];
      if (!a.contains(c))
        throw std::invalid_argument("permutation: symbol not in alphabet");
      if (rank_[c] >= 0)
        throw std::invalid_argument("permutation: repeated symbol");
      rank_[c] = static_cast<std::int16_t>(i);
    }
    identity_ = (order_ == a.symbols());
    std::string rev(a.symbols());
    std::reverse(rev.begin(), rev.end());
    reverse_ = (order_ == rev);
  }

  std::string order_;
  std::array<std::int16_t, 256> rank_;
  bool identity_ = false;
  bool reverse_ = false;
};

// K = (pi_0, ..., pi_{k-1}) over a fixed alphabet; pi_0 must be the
// identity. Position i of a comparison uses perm(i) = pi_{i mod k}.
class OrderSpec {
public:
  OrderSpec(Alphabet alphabet, std::vector<Permutation> perms)
      : alphabet_(std::move(alphabet)), perms_(std::move(perms)) {
    if (perms_.empty())
      throw std::invalid_argument("order spec: needs at least one permutation");
    if (!perms_[0].is_identity())
      throw std::invalid_argument("order spec: first permutation must be id");
    for (const Permutation& p : perms_)
      if (p.size() != alphabet_.size())
        throw std::invalid_argument("order spec: permutation alphabet mismatch");
  }

  // Permutations joined by ':', e.g. "id:rev" or "id:cab".
  static OrderSpec parse(std::string_view text, const Alphabet& alphabet) {
    std::vector<Permutation> ps;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      const std::string_view part =
          text.substr(start, colon == std::string_view::npos ? std::string_view::npos
                                                             : colon - start);
      if (part.empty())
        throw std::invalid_argument("order spec: empty permutation in list");
      ps.push_back(Permutation::parse(alphabet, part));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    return OrderSpec(alphabet, std::move(ps));
  }

  std::size_t k() const { return perms_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Permutation>& perms() const { return perms_; }
  const Permutation& perm(std::size_t position) const {
    return perms_[position % perms_.size()];
  }

  bool is_bwt() const { return perms_.size() == 1; }
  bool is_abwt() const { return perms_.size() == 2 && perms_[1].is_reverse(); }

  std::string to_text() const {
    std::string t;
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      if (i) t.push_back(':');
      t += perms_[i].to_text();
    }
    return t;
  }

private:
  Alphabet alphabet_;
  std::vector<Permutation> perms_;
};

// Alternating lexicographic comparison: ascending bytes at even
// positions, descending at odd ones. Total on all byte strings; in the
// proper-prefix case the shorter word precedes iff its length is even.
inline std::strong_ordering cmp_alt(std::string_view x, std::string_view y) {
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned char a = static_cast<unsigned char>(x[i]);
    const unsigned char b = static_cast<unsigned char>(y[i]);
    if (a == b) continue;
    const bool x_first = (i % 2 == 0) ? a < b : a > b;
    return x_first ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.size() == y.size()) return std::strong_ordering::equal;
  const bool shorter_first = (m % 2 == 0);
  if (x.size() < y.size())
    return shorter_first ? std::strong_ordering::less : std::strong_ordering::greater;
  return shorter_first ? std::strong_ordering::greater : std::strong_ordering::less;
}

// Comparison under an arbitrary order spec. The words must either have
// equal length or disagree before the shorter one ends; a pure prefix
// has no defined answer here.
inline std::strong_ordering cmp_k(const OrderSpec& spec, std::string_view x,
                                  std::string_view y) {
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned char a = static_cast<unsigned char>(x[i]);
    const unsigned char b = static_cast<unsigned char>(y[i]);
    if (a == b) continue;
    const Permutation& pi = spec.perm(i);
    return pi.rank(a) < pi.rank(b) ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  if (x.size() == y.size()) return std::strong_ordering::equal;
  throw std::invalid_argument(
      "cmp_k: length mismatch with no mismatch before the shorter word ends");
}

// w rotated left by k places: w[k..) followed by w[..k).
inline std::string rotate(std::string_view w, std::size_t k) {
  if (w.empty()) return {};
  k %= w.size();
  std::string out;
  out.reserve(w.size());
  out.append(w.substr(k));
  out.append(w.substr(0, k));
  return out;
}

}  // namespace abwt
