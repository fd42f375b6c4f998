#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "abwt/dcsort.hpp"
#include "abwt/reference.hpp"

using namespace abwt;

namespace {

std::string with_terminator(std::string w) {
  w.push_back(static_cast<char>(sentinel_byte));
  return w;
}

std::string random_text(std::mt19937_64& rng, std::size_t len, int sigma) {
  std::uniform_int_distribution<int> sym(0, sigma - 1);
  std::string w(len, '\0');
  for (char& c : w) c = static_cast<char>('a' + sym(rng));
  return w;
}

}  // namespace

TEST_CASE("difference covers verify by exhaustive residue checking") {
  REQUIRE(verify_cover(DifferenceCover{6, {0, 1, 3}}));
  REQUIRE(verify_cover(DifferenceCover{7, {0, 1, 3}}));
  REQUIRE(verify_cover(DifferenceCover{4, {0, 1, 2}}));
  REQUIRE_FALSE(verify_cover(DifferenceCover{6, {0, 1}}));
  REQUIRE_FALSE(verify_cover(DifferenceCover{8, {0, 1, 2}}));
}

TEST_CASE("generated covers are the known minimal ones") {
  REQUIRE(gen_cover(2).d == std::vector<std::uint32_t>{0, 1});
  REQUIRE(gen_cover(4).d == std::vector<std::uint32_t>{0, 1, 2});
  REQUIRE(gen_cover(6).d == std::vector<std::uint32_t>{0, 1, 3});
  REQUIRE(gen_cover(8).d == std::vector<std::uint32_t>{0, 1, 2, 4});
  REQUIRE(gen_cover(12).d == std::vector<std::uint32_t>{0, 1, 3, 7});

  for (std::uint32_t v = 2; v <= 64; v += 2) {
    const DifferenceCover c = gen_cover(v);
    REQUIRE(c.v == v);
    REQUIRE(verify_cover(c));
  }

  REQUIRE_THROWS_AS(gen_cover(0), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cover(5), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cover(66), std::invalid_argument);
}

TEST_CASE("the worked example produces the recorded intermediates") {
  DcTrace trace;
  const std::string s = with_terminator("abaacabaacab");
  const std::vector<index_t> sa = alt_suffix_array_dc(s, default_cover(), &trace);

  REQUIRE(trace.sample_positions ==
          std::vector<index_t>{0, 6, 12, 1, 7, 3, 9});
  REQUIRE(trace.tuple_ranks == std::vector<index_t>{2, 4, 0, 4, 3, 1, 5});
  REQUIRE(trace.rank_sa == std::vector<index_t>{2, 5, 0, 4, 1, 3, 6});
  REQUIRE(sa == alt_suffix_sort_naive(s));
}

TEST_CASE("sampled and naive suffix sorts agree on every short word") {
  for (int sigma : {1, 2, 3}) {
    const std::string syms = std::string("abc").substr(0, sigma);
    for (std::size_t len = 1; len <= 9; ++len) {
      std::vector<std::size_t> odo(len, 0);
      while (true) {
        std::string w(len, '\0');
        for (std::size_t i = 0; i < len; ++i) w[i] = syms[odo[i]];
        const std::string s = with_terminator(w);
        REQUIRE(alt_suffix_array_dc(s) == alt_suffix_sort_naive(s));
        std::size_t d = len;
        while (d > 0 && odo[d - 1] + 1 == syms.size()) odo[--d] = 0;
        if (d == 0) break;
        ++odo[d - 1];
      }
    }
  }
}

TEST_CASE("sampled and naive suffix sorts agree on random texts") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::size_t> len_d(1, 800);
  for (int sigma : {1, 2, 4, 26}) {
    for (int i = 0; i < 15; ++i) {
      const std::string s = with_terminator(random_text(rng, len_d(rng), sigma));
      REQUIRE(alt_suffix_array_dc(s) == alt_suffix_sort_naive(s));
    }
  }
}

TEST_CASE("highly periodic texts sort correctly") {
  std::vector<std::string> words;
  words.push_back(std::string(500, 'a'));
  std::string alt;
  for (int i = 0; i < 300; ++i) alt += (i % 2 ? "b" : "a");
  words.push_back(alt);
  std::string fib_a = "a", fib_b = "ab";
  while (fib_b.size() < 400) {
    std::string next = fib_b + fib_a;
    fib_a = std::move(fib_b);
    fib_b = std::move(next);
  }
  words.push_back(fib_b);
  for (const std::string& w : words) {
    const std::string s = with_terminator(w);
    REQUIRE(alt_suffix_array_dc(s) == alt_suffix_sort_naive(s));
  }
}

TEST_CASE("every even cover size yields the same suffix array") {
  std::mt19937_64 rng(61);
  const std::string s = with_terminator(random_text(rng, 400, 3));
  const std::vector<index_t> expect = alt_suffix_sort_naive(s);
  for (std::uint32_t v : {2u, 4u, 6u, 12u, 32u, 64u})
    REQUIRE(alt_suffix_array_dc(s, gen_cover(v)) == expect);
}

TEST_CASE("the sampled sort validates its input") {
  REQUIRE_THROWS_AS(alt_suffix_array_dc("banana"), std::invalid_argument);
  REQUIRE_THROWS_AS(alt_suffix_array_dc(std::string("ba\0na\0", 6)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(alt_suffix_array_dc(""), std::invalid_argument);
  REQUIRE_THROWS_AS(
      alt_suffix_array_dc(with_terminator("abc"), DifferenceCover{7, {0, 1, 3}}),
      std::invalid_argument);
}

TEST_CASE("transform columns read off the suffix array") {
  const std::string banana = with_terminator("banana");
  const TransformOutput t = abwt_from_suffixes(banana, alt_suffix_array_dc(banana));
  REQUIRE(t.last_column == std::string("abnn\0aa", 7));
  REQUIRE(t.row_index == 4);

  const std::string ananab = with_terminator("ananab");
  const TransformOutput u = abwt_from_suffixes(ananab, alt_suffix_array_dc(ananab));
  REQUIRE(u.last_column == std::string("b\0nnaaa", 7));
  REQUIRE(u.row_index == 1);

  REQUIRE(abwt_fast(banana) == t);
}

TEST_CASE("the fast transform matches the rotation sort on terminated words") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<std::size_t> len_d(1, 120);
  for (int i = 0; i < 40; ++i) {
    const std::string s = with_terminator(random_text(rng, len_d(rng), 3));
    const Alphabet a = Alphabet::from_word(s);
    REQUIRE(abwt_fast(s) == bwt_k_naive(s, OrderSpec::parse("id:rev", a)));
  }
}
