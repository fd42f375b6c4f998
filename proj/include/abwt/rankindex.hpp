#pragma once

// Occurrence counting over a fixed text (normally a transform's last
// column): Parikh counts, cumulative symbol counts, and inclusive
// prefix ranks answered from per-block checkpoints plus a short scan.

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abwt/orders.hpp"

namespace abwt {

class RankIndex {
public:
  explicit RankIndex(std::string text, std::size_t block = 64)
      : text_(std::move(text)), block_(block) {
    if (block_ == 0) throw std::invalid_argument("rank index: block must be positive");
    if (text_.size() >= std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("rank index: text too large");
    id_.fill(-1);
    std::array<std::uint64_t, 256> full{};
    for (char ch : text_) ++full[static_cast<unsigned char>(ch)];
    for (int c = 0; c < 256; ++c) {
      if (full[c] == 0) continue;
      id_[c] = static_cast<std::int16_t>(alpha_.size());
      alpha_.push_back(static_cast<char>(c));
      parikh_.push_back(full[c]);
    }
    cum_lt_.resize(alpha_.size());
    std::uint64_t below = 0;
    for (std::size_t s = 0; s < alpha_.size(); ++s) {
      cum_lt_[s] = below;
      below += parikh_[s];
    }

    // checkpoint t holds the counts in text[0, t*block)
    const std::size_t n = text_.size();
    const std::size_t sigma = alpha_.size();
    const std::size_t checkpoints = n / block_ + 1;
    cp_.assign(checkpoints * sigma, 0);
    std::vector<std::uint32_t> running(sigma, 0);
    std::size_t next_cp = 1;
    for (std::size_t i = 0; i < n; ++i) {
      ++running[static_cast<std::size_t>(id_[static_cast<unsigned char>(text_[i])])];
      if ((i + 1) % block_ == 0 && next_cp < checkpoints) {
        for (std::size_t s = 0; s < sigma; ++s) cp_[next_cp * sigma + s] = running[s];
        ++next_cp;
      }
    }
  }

  const std::string& text() const { return text_; }
  std::size_t size() const { return text_.size(); }
  std::size_t sigma() const { return alpha_.size(); }
  const std::string& alphabet() const { return alpha_; }
  std::size_t block() const { return block_; }
  bool contains(unsigned char c) const { return id_[c] >= 0; }

  std::uint64_t parikh(unsigned char c) const { return parikh_[slot(c)]; }

  // Number of text symbols strictly smaller than c in the base order.
  std::uint64_t cum_lt(unsigned char c) const { return cum_lt_[slot(c)]; }

  // Number of text symbols smaller than or equal to c.
  std::uint64_t cum_le(unsigned char c) const {
    const std::size_t s = slot(c);
    return cum_lt_[s] + parikh_[s];
  }

  // Occurrences of c in text[0..i], inclusive; rank(c, -1) = 0.
  std::uint64_t rank(unsigned char c, std::int64_t i) const {
    if (i < -1 || i >= static_cast<std::int64_t>(text_.size()))
      throw std::out_of_range("rank index: position out of range");
    const std::size_t s = slot(c);
    if (i < 0) return 0;
    const std::size_t end = static_cast<std::size_t>(i) + 1;  // count in text[0, end)
    const std::size_t t = end / block_;
    std::uint64_t count = cp_[t * alpha_.size() + s];
    for (std::size_t p = t * block_; p < end; ++p)
      if (static_cast<unsigned char>(text_[p]) == static_cast<unsigned char>(alpha_[s]))
        ++count;
    return count;
  }

private:
  std::size_t slot(unsigned char c) const {
    if (id_[c] < 0) throw std::invalid_argument("rank index: unknown symbol");
    return static_cast<std::size_t>(id_[c]);
  }

  std::string text_;
  std::size_t block_;
  std::string alpha_;
  std::array<std::int16_t, 256> id_;
  std::vector<std::uint64_t> parikh_;
  std::vector<std::uint64_t> cum_lt_;
  std::vector<std::uint32_t> cp_;
};

}  // namespace abwt
