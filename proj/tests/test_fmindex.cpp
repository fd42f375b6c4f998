#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abwt/fmindex.hpp"

using namespace abwt;

namespace {

// Circular occurrences of p in w by direct scanning.
std::vector<index_t> naive_positions(std::string_view w, std::string_view p) {
  std::vector<index_t> out;
  if (p.empty() || p.size() > w.size()) return out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < p.size() && hit; ++j)
      hit = w[(i + j) % w.size()] == p[j];
    if (hit) out.push_back(static_cast<index_t>(i));
  }
  return out;
}

std::string serialized(const AbwtIndex& ix) {
  std::ostringstream os(std::ios::binary);
  ix.serialize(os);
  return std::move(os).str();
}

AbwtIndex from_bytes(const std::string& bytes) {
  std::istringstream is(bytes, std::ios::binary);
  return AbwtIndex::deserialize(is);
}

}  // namespace

TEST_CASE("row ranges walk backward through racaab") {
  const AbwtIndex ix = AbwtIndex::build("acaabr");
  REQUIRE(ix.size() == 6);
  REQUIRE(ix.row_of_word() == 0);

  const auto c = ix.init_range('c');
  REQUIRE(c == RowRange{4, 4});
  REQUIRE(ix.backward_extend(*c, 'a') == RowRange{0, 0});

  const auto a = ix.init_range('a');
  REQUIRE(a == RowRange{0, 2});
  REQUIRE(ix.backward_extend(*a, 'r') == RowRange{5, 5});
  REQUIRE(ix.backward_extend(*a, 'a') == RowRange{2, 2});

  REQUIRE_FALSE(ix.init_range('z').has_value());
  REQUIRE_FALSE(ix.backward_extend(*c, 'c').has_value());
}

TEST_CASE("counting is circular") {
  const AbwtIndex ix = AbwtIndex::build("banana", /*store_positions=*/true);
  REQUIRE(ix.count("an") == 2);
  REQUIRE(ix.locate("an") == std::vector<index_t>{1, 3});
  REQUIRE(ix.locate("na") == std::vector<index_t>{2, 4});
  REQUIRE(ix.count("a") == 3);
  REQUIRE(ix.count("nab") == 1);  // wraps around the end
  REQUIRE(ix.locate("nab") == std::vector<index_t>{4});
  REQUIRE(ix.count("z") == 0);
  REQUIRE(ix.count("bananab") == 0);  // longer than the word
  REQUIRE_THROWS_AS(ix.count(""), std::invalid_argument);
}

TEST_CASE("locate needs stored positions") {
  const AbwtIndex ix = AbwtIndex::build("banana");
  REQUIRE(ix.count("an") == 2);
  REQUIRE_THROWS_AS(ix.locate("an"), std::invalid_argument);
}

TEST_CASE("matching agrees with a direct circular scan") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> len_d(1, 40);
  std::uniform_int_distribution<std::size_t> plen_d(1, 6);
  std::uniform_int_distribution<int> sym(0, 2);
  int tried = 0;
  while (tried < 200) {
    std::string w(len_d(rng), '\0');
    for (char& c : w) c = static_cast<char>('a' + sym(rng));
    if (!is_primitive(w)) continue;
    ++tried;
    const AbwtIndex ix = AbwtIndex::build(w, true);
    for (int q = 0; q < 10; ++q) {
      std::string p(plen_d(rng), '\0');
      for (char& c : p) c = static_cast<char>('a' + sym(rng));
      const std::vector<index_t> expect = naive_positions(w, p);
      REQUIRE(ix.count(p) == expect.size());
      REQUIRE(ix.locate(p) == expect);
    }
  }
}

TEST_CASE("terminated words index their suffixes") {
  const std::string w("banana\0", 7);
  const AbwtIndex ix = AbwtIndex::build(w, true);
  REQUIRE(ix.count("an") == 2);
  REQUIRE(ix.locate("ana") == std::vector<index_t>{1, 3});
  // Nothing wraps across the terminator for patterns without one.
  REQUIRE(ix.count("ab") == 0);
  REQUIRE(ix.word() == w);
}

TEST_CASE("an index roundtrips through its byte form") {
  for (bool positions : {false, true}) {
    const AbwtIndex ix = AbwtIndex::build("acaabr", positions);
    const std::string bytes = serialized(ix);
    REQUIRE(bytes.substr(0, 8) == "ABWTIDX1");
    const AbwtIndex back = from_bytes(bytes);
    REQUIRE(back.size() == ix.size());
    REQUIRE(back.row_of_word() == ix.row_of_word());
    REQUIRE(back.has_positions() == positions);
    REQUIRE(back.count("aa") == 1);
    REQUIRE(back.word() == "acaabr");
    if (positions) REQUIRE(back.locate("aa") == ix.locate("aa"));
  }
}

TEST_CASE("deserialization rejects corrupt bytes") {
  const AbwtIndex ix = AbwtIndex::build("acaabr", true);
  const std::string good = serialized(ix);

  std::string bad_magic = good;
  bad_magic[0] = 'X';
  REQUIRE_THROWS_AS(from_bytes(bad_magic), std::invalid_argument);

  REQUIRE_THROWS_AS(from_bytes(good.substr(0, good.size() - 3)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(from_bytes(good.substr(0, 20)), std::invalid_argument);

  std::string bad_flag = good;
  bad_flag[8 + 8 + 8 + 6] = 7;
  REQUIRE_THROWS_AS(from_bytes(bad_flag), std::invalid_argument);

  std::string bad_pos = good;
  bad_pos[8 + 8 + 8 + 6 + 1] = 9;  // position 9 in a word of length 6
  REQUIRE_THROWS_AS(from_bytes(bad_pos), std::invalid_argument);

  std::string bad_column = good;
  bad_column[8 + 8 + 8 + 0] = 'b';  // "bacaab" closes its orbit after two steps
  REQUIRE_THROWS_AS(from_bytes(bad_column), std::invalid_argument);
}

TEST_CASE("building validates its inputs") {
  REQUIRE_THROWS_AS(AbwtIndex::build(""), std::invalid_argument);
  REQUIRE_THROWS_AS(AbwtIndex::build("abab"), std::invalid_argument);
  REQUIRE_THROWS_AS(AbwtIndex::build(std::string("ab\0ab", 5)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(AbwtIndex::from_transform(TransformOutput{"racaab", 9}),
                    std::invalid_argument);
}

TEST_CASE("an index can be rebuilt from a bare transform") {
  const AbwtIndex ix = AbwtIndex::from_transform(TransformOutput{"racaab", 0});
  REQUIRE(ix.word() == "acaabr");
  REQUIRE(ix.count("ca") == 1);
  REQUIRE_FALSE(ix.has_positions());
}
