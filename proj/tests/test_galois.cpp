#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "abwt/galois.hpp"
#include "abwt/reference.hpp"

using namespace abwt;

namespace {

std::size_t alt_least_rotation(const std::string& w) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (cmp_alt(rotate(w, k), rotate(w, best)) < 0) best = k;
  return best;
}

void for_each_word(std::string_view syms, std::size_t len,
                   const std::function<void(const std::string&)>& fn) {
  std::vector<std::size_t> odo(len, 0);
  while (true) {
    std::string w(len, '\0');
    for (std::size_t i = 0; i < len; ++i) w[i] = syms[odo[i]];
    fn(w);
    std::size_t d = len;
    while (d > 0 && odo[d - 1] + 1 == syms.size()) odo[--d] = 0;
    if (d == 0) return;
    ++odo[d - 1];
  }
}

}  // namespace

TEST_CASE("border arrays follow the classic failure function") {
  REQUIRE(border_array("ababa") == std::vector<std::int32_t>{-1, 0, 0, 1, 2, 3});
  REQUIRE(border_array("aabaa") == std::vector<std::int32_t>{-1, 0, 1, 0, 1, 2});
  REQUIRE(border_array("abc") == std::vector<std::int32_t>{-1, 0, 0, 0});
  REQUIRE(border_array("") == std::vector<std::int32_t>{-1});
}

TEST_CASE("primitivity comes from the final border") {
  REQUIRE(is_primitive("a"));
  REQUIRE(is_primitive("ab"));
  REQUIRE(is_primitive("aba"));
  REQUIRE(is_primitive("aababb"));
  REQUIRE_FALSE(is_primitive("aa"));
  REQUIRE_FALSE(is_primitive("abab"));
  REQUIRE_FALSE(is_primitive("aabaab"));
  REQUIRE_FALSE(is_primitive(""));
}

TEST_CASE("the rotation scan finds known shifts and comparison counts") {
  const GaloisRotation g1 = find_galois_rotation("aababb");
  REQUIRE(g1.shift == 1);
  REQUIRE(g1.comparisons == 14);
  REQUIRE(rotate("aababb", g1.shift) == "ababba");

  const GaloisRotation g2 = find_galois_rotation("ba");
  REQUIRE(g2.shift == 1);
  REQUIRE(g2.comparisons == 3);

  const GaloisRotation g3 = find_galois_rotation("banana");
  REQUIRE(g3.shift == 1);
  REQUIRE(rotate("banana", g3.shift) == "ananab");

  REQUIRE(find_galois_rotation("a").shift == 0);
  REQUIRE_THROWS_AS(find_galois_rotation("abab"), std::invalid_argument);
  REQUIRE_THROWS_AS(find_galois_rotation(""), std::invalid_argument);
}

TEST_CASE("the scan picks the least rotation of every short word") {
  for (std::size_t len = 1; len <= 10; ++len) {
    for_each_word("ab", len, [&](const std::string& w) {
      if (!is_primitive(w)) return;
      const GaloisRotation g = find_galois_rotation(w);
      REQUIRE(g.shift == alt_least_rotation(w));
      REQUIRE(g.comparisons <= 4 * w.size() - 3);
    });
  }
  for (std::size_t len = 1; len <= 7; ++len) {
    for_each_word("abc", len, [&](const std::string& w) {
      if (!is_primitive(w)) return;
      const GaloisRotation g = find_galois_rotation(w);
      REQUIRE(g.shift == alt_least_rotation(w));
      REQUIRE(g.comparisons <= 4 * w.size() - 3);
    });
  }
}

TEST_CASE("the comparison bound holds on long random words") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> sym(0, 1);
  for (std::size_t n : {1000, 10000, 50000}) {
    std::string w(n, '\0');
    do {
      for (char& c : w) c = static_cast<char>('a' + sym(rng));
    } while (!is_primitive(w));
    REQUIRE(find_galois_rotation(w).comparisons <= 4 * n - 3);
  }
}

TEST_CASE("membership by rotations matches membership by suffixes") {
  std::size_t members = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    for_each_word("ab", len, [&](const std::string& w) {
      const bool direct = is_galois(w);
      REQUIRE(direct == is_galois_by_suffixes(w));
      if (direct) ++members;
    });
  }
  REQUIRE(members > 20);  // the family is far from empty
}

TEST_CASE("every border of a member is odd") {
  for (std::size_t len = 1; len <= 12; ++len) {
    for_each_word("ab", len, [&](const std::string& w) {
      if (!is_galois(w)) return;
      const std::vector<std::int32_t> b = border_array(w);
      for (std::int32_t k = b[w.size()]; k > 0; k = b[k]) REQUIRE(k % 2 == 1);
    });
  }
}

TEST_CASE("the rotation pipeline reproduces the alternating transform") {
  const TransformOutput banana = abwt_sentinel_free("banana");
  REQUIRE(banana.last_column == "bnnaaa");
  REQUIRE(banana.row_index == 3);

  const TransformOutput acaabr = abwt_sentinel_free("acaabr");
  REQUIRE(acaabr.last_column == "racaab");
  REQUIRE(acaabr.row_index == 0);

  REQUIRE_THROWS_AS(abwt_sentinel_free("abab"), std::invalid_argument);
  REQUIRE_THROWS_AS(abwt_sentinel_free(std::string("ab\0", 3)), std::invalid_argument);
}

TEST_CASE("fast and naive transforms agree everywhere") {
  for (std::size_t len = 1; len <= 8; ++len) {
    for_each_word("ab", len, [&](const std::string& w) {
      if (!is_primitive(w)) return;
      const Alphabet a = Alphabet::from_word(w);
      const TransformOutput naive = bwt_k_naive(w, OrderSpec::parse("id:rev", a));
      REQUIRE(abwt_sentinel_free(w) == naive);
    });
  }

  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::size_t> len_d(1, 200);
  std::uniform_int_distribution<int> sym(0, 3);
  int tried = 0;
  while (tried < 60) {
    std::string w(len_d(rng), '\0');
    for (char& c : w) c = static_cast<char>('a' + sym(rng));
    if (!is_primitive(w)) continue;
    ++tried;
    const Alphabet a = Alphabet::from_word(w);
    const TransformOutput naive = bwt_k_naive(w, OrderSpec::parse("id:rev", a));
    REQUIRE(abwt_sentinel_free(w) == naive);
  }
}
