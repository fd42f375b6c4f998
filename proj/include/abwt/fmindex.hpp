#pragma once

// Backward-search index over the alternating transform. Patterns are
// matched against rows of the sorted rotation matrix, so a count is the
// number of rotations of the indexed word beginning with the pattern
// (circular occurrences). Indexing word + terminator gives the usual
// linear substring semantics instead.
//
// Extending a match range [b, e] leftward by symbol x uses the inclusive
// ranks at both ends: rows extending to x map through the alternating LF
// in reversed relative order, so the new range is
//   [cum_le(x) - rank(x, e), cum_le(x) - rank(x, b-1) - 1]
// and it is nonempty exactly when rank(x, e) > rank(x, b-1).

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/dcsort.hpp"
#include "abwt/galois.hpp"
#include "abwt/lfmap.hpp"
#include "abwt/orders.hpp"
#include "abwt/rankindex.hpp"

namespace abwt {

// Inclusive row interval of the matrix.
struct RowRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t width() const { return last - first + 1; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

class AbwtIndex {
public:
  // Index a word. A word containing the 0x00 terminator must carry it
  // uniquely at the end and is sorted directly; a terminator-free word
  // must be primitive and goes through its Galois rotation. Position
  // data (rotation start per row) is optional and only needed by locate.
  static AbwtIndex build(std::string_view w, bool store_positions = false) {
    const std::size_t n = w.size();
    if (n == 0) throw std::invalid_argument("index: empty word");
    std::vector<index_t> rows_to_pos;
    TransformOutput t;
    if (w.find('\0') != std::string_view::npos) {
      const std::vector<index_t> sa = alt_suffix_array_dc(w, default_cover());
      t = abwt_from_suffixes(w, sa);
      rows_to_pos = sa;
    } else {
      const GaloisRotation g = find_galois_rotation(w);
      const std::string conj = rotate(w, g.shift);
      std::string s(conj);
      s.push_back(static_cast<char>(sentinel_byte));
      const std::vector<index_t> sa = alt_suffix_array_dc(s, default_cover());
      t.last_column.resize(n);
      rows_to_pos.resize(n);
      const std::size_t want = (n - g.shift) % n;
      for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t p = sa[i];
        t.last_column[i - 1] = conj[(p + n - 1) % n];
        rows_to_pos[i - 1] = static_cast<index_t>((g.shift + p) % n);
        if (p == want) t.row_index = i - 1;
      }
    }
    AbwtIndex ix(std::move(t));
    if (store_positions) ix.positions_ = std::move(rows_to_pos);
    return ix;
  }

  // Wrap an existing transform; validated by walking its LF orbit.
  static AbwtIndex from_transform(TransformOutput t) {
    invert_fast(t, InverseMode::abwt);  // throws unless t is an image
    return AbwtIndex(std::move(t));
  }

  const RankIndex& rank_index() const { return rank_; }
  std::size_t size() const { return rank_.size(); }
  std::size_t row_of_word() const { return row_index_; }
  bool has_positions() const { return !positions_.empty(); }
  const std::vector<index_t>& positions() const { return positions_; }

  // Rows whose first symbol is c. The first matrix column is sorted in
  // base order regardless of k, so this is the cumulative-count window.
  std::optional<RowRange> init_range(unsigned char c) const {
    if (!rank_.contains(c)) return std::nullopt;
    return RowRange{rank_.cum_lt(c), rank_.cum_le(c) - 1};
  }

  // Rows prefixed by x . pattern, given the rows prefixed by pattern.
  std::optional<RowRange> backward_extend(const RowRange& r, unsigned char x) const {
    if (r.first > r.last || r.last >= rank_.size())
      throw std::invalid_argument("backward_extend: invalid row range");
    if (!rank_.contains(x)) return std::nullopt;
    const std::uint64_t hi = rank_.rank(x, static_cast<std::int64_t>(r.last));
    const std::uint64_t lo = rank_.rank(x, static_cast<std::int64_t>(r.first) - 1);
    if (hi <= lo) return std::nullopt;
    const std::uint64_t le = rank_.cum_le(x);
    return RowRange{le - hi, le - lo - 1};
  }

  std::optional<RowRange> match(std::string_view p) const {
    if (p.empty()) throw std::invalid_argument("match: empty pattern");
    if (p.size() > size()) return std::nullopt;
    auto r = init_range(static_cast<unsigned char>(p.back()));
    for (std::size_t i = p.size() - 1; r && i-- > 0;)
      r = backward_extend(*r, static_cast<unsigned char>(p[i]));
    return r;
  }

  // Number of rotations of the indexed word starting with p.
  std::uint64_t count(std::string_view p) const {
    const auto r = match(p);
    return r ? r->width() : 0;
  }

  // Starting positions of those rotations, ascending. Needs an index
  // built with positions.
  std::vector<index_t> locate(std::string_view p) const {
    if (!has_positions())
      throw std::invalid_argument("locate: index was built without positions");
    std::vector<index_t> out;
    if (const auto r = match(p)) {
      out.reserve(r->width());
      for (std::size_t i = r->first; i <= r->last; ++i) out.push_back(positions_[i]);
      std::sort(out.begin(), out.end());
    }
    return out;
  }

  std::string word() const {
    return invert_fast(TransformOutput{rank_.text(), row_index_}, InverseMode::abwt);
  }

  // Layout: "ABWTIDX1", n and row as 64-bit little endian, the last
  // column verbatim, a position-data flag byte, then n 32-bit little
  // endian rotation starts when the flag is 1.
  void serialize(std::ostream& os) const {
    os.write(magic(), 8);
    write_u64(os, rank_.size());
    write_u64(os, row_index_);
    os.write(rank_.text().data(), static_cast<std::streamsize>(rank_.size()));
    const char flag = has_positions() ? 1 : 0;
    os.write(&flag, 1);
    if (has_positions())
      for (index_t p : positions_) write_u32(os, p);
    if (!os) throw std::runtime_error("index: write failed");
  }

  static AbwtIndex deserialize(std::istream& is) {
    char m[8];
    if (!is.read(m, 8) || std::string_view(m, 8) != magic())
      throw std::invalid_argument("index: bad magic");
    const std::uint64_t n = read_u64(is);
    const std::uint64_t row = read_u64(is);
    if (n == 0 || row >= n) throw std::invalid_argument("index: corrupt header");
    TransformOutput t;
    t.last_column.resize(n);
    if (!is.read(t.last_column.data(), static_cast<std::streamsize>(n)))
      throw std::invalid_argument("index: truncated column");
    t.row_index = row;
    char flag;
    if (!is.read(&flag, 1) || (flag != 0 && flag != 1))
      throw std::invalid_argument("index: corrupt position flag");
    std::vector<index_t> pos;
    if (flag == 1) {
      pos.resize(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        pos[i] = read_u32(is);
        if (pos[i] >= n) throw std::invalid_argument("index: corrupt position data");
      }
    }
    AbwtIndex ix = from_transform(std::move(t));
    ix.positions_ = std::move(pos);
    return ix;
  }

private:
  explicit AbwtIndex(TransformOutput t)
      : rank_(std::move(t.last_column)), row_index_(t.row_index) {
    if (row_index_ >= rank_.size())
      throw std::invalid_argument("index: row out of range");
  }

  static const char* magic() { return "ABWTIDX1"; }

  static void write_u64(std::ostream& os, std::uint64_t x) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    os.write(b, 8);
  }
  static void write_u32(std::ostream& os, std::uint32_t x) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    os.write(b, 4);
  }
  static std::uint64_t read_u64(std::istream& is) {
    char b[8];
    if (!is.read(b, 8)) throw std::invalid_argument("index: truncated header");
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i)
      x |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return x;
  }
  static std::uint32_t read_u32(std::istream& is) {
    char b[4];
    if (!is.read(b, 4)) throw std::invalid_argument("index: truncated position data");
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i)
      x |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return x;
  }

  RankIndex rank_;
  std::size_t row_index_ = 0;
  std::vector<index_t> positions_;
};

}  // namespace abwt
