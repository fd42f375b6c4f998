#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <string>
#include <vector>

#include "abwt/lfmap.hpp"
#include "abwt/reference.hpp"

using namespace abwt;

namespace {

// Ground truth: LF must send the row holding the rotation that starts at
// position s to the row holding the rotation that starts at s - 1.
void check_lf_against_matrix(const std::string& w, const OrderSpec& spec,
                             InverseMode mode) {
  const std::size_t n = w.size();
  const std::vector<index_t> rows = rotation_order(w, spec);
  std::vector<std::size_t> row_of(n);
  for (std::size_t i = 0; i < n; ++i) row_of[rows[i]] = i;

  const TransformOutput t = bwt_k_naive(w, spec);
  const RankIndex ri(t.last_column);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t expect = row_of[(rows[i] + n - 1) % n];
    const std::size_t got = mode == InverseMode::bwt ? lf_bwt(ri, i) : lf_abwt(ri, i);
    REQUIRE(got == expect);
  }
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

TEST_CASE("LF goldens on the two transforms of acaabr") {
  const RankIndex plain("caraab");
  REQUIRE(lf_bwt(plain, 0) == 4);

  const RankIndex alt("racaab");
  REQUIRE(lf_abwt(alt, 0) == 5);
  REQUIRE(lf_abwt(alt, 3) == 1);

  REQUIRE_THROWS_AS(lf_bwt(plain, 6), std::out_of_range);
  REQUIRE_THROWS_AS(lf_abwt(alt, 6), std::out_of_range);
}

TEST_CASE("LF matches the matrix on every short word") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for_each_word("abc", len, [&](const std::string& w) {
      if (!is_primitive(w)) return;
      const Alphabet a = Alphabet::from_word(w);
      check_lf_against_matrix(w, OrderSpec::parse("id", a), InverseMode::bwt);
      check_lf_against_matrix(w, OrderSpec::parse("id:rev", a), InverseMode::abwt);
    });
  }
}

TEST_CASE("fast inversion recovers the goldens") {
  REQUIRE(invert_fast(TransformOutput{"nnbaaa", 3}, InverseMode::bwt) == "banana");
  REQUIRE(invert_fast(TransformOutput{"bnnaaa", 3}, InverseMode::abwt) == "banana");
  REQUIRE(invert_fast(TransformOutput{std::string("b\0nnaaa", 7), 1},
                      InverseMode::abwt) == std::string("ananab\0", 7));
  REQUIRE(invert_fast(TransformOutput{"caraab", 2}, InverseMode::bwt) == "acaabr");
  REQUIRE(invert_fast(TransformOutput{"racaab", 0}, InverseMode::abwt) == "acaabr");
}

TEST_CASE("a different row index selects a rotation") {
  REQUIRE(invert_fast(TransformOutput{"nnbaaa", 5}, InverseMode::bwt) == "nanaba");
  REQUIRE(invert_fast(TransformOutput{"nnbaaa", 0}, InverseMode::bwt) == "abanan");
}

TEST_CASE("fast inversion rejects non-images") {
  REQUIRE_THROWS_AS(invert_fast(TransformOutput{"", 0}, InverseMode::bwt),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(invert_fast(TransformOutput{"ab", 5}, InverseMode::bwt),
                    std::invalid_argument);
  // The orbit of "aaab" under the standard map closes after one step.
  REQUIRE_THROWS_AS(invert_fast(TransformOutput{"aaab", 0}, InverseMode::bwt),
                    std::invalid_argument);
  // "aa" walks a full alternating orbit but rebuilds a square.
  REQUIRE_THROWS_AS(invert_fast(TransformOutput{"aa", 0}, InverseMode::abwt),
                    std::invalid_argument);
}

TEST_CASE("fast and generic inversion agree on every short word") {
  const Alphabet ab = Alphabet::from_symbols("ab");
  const OrderSpec bwt_spec = OrderSpec::parse("id", ab);
  const OrderSpec abwt_spec = OrderSpec::parse("id:rev", ab);
  for (std::size_t len = 1; len <= 8; ++len) {
    for_each_word("ab", len, [&](const std::string& w) {
      if (!is_primitive(w)) return;
      const TransformOutput tb = bwt_k_naive(w, bwt_spec);
      const TransformOutput ta = bwt_k_naive(w, abwt_spec);
      REQUIRE(invert_fast(tb, InverseMode::bwt) == w);
      REQUIRE(invert_fast(ta, InverseMode::abwt) == w);
      REQUIRE(invert_generic(tb, bwt_spec) == w);
      REQUIRE(invert_generic(ta, abwt_spec) == w);
    });
  }
}
