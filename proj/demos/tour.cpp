// A walk through the library on one small word: both transforms, the
// fast inverse, pattern counting, and the statistics layer.

#include <cstdio>

#include "abwt/abwt.hpp"

int main() {
  const std::string w = "banana";
  const abwt::Alphabet alphabet = abwt::Alphabet::from_word(w);

  // The standard and the alternating transform of the same word.
  const abwt::OrderSpec bwt_spec = abwt::OrderSpec::parse("id", alphabet);
  const abwt::OrderSpec abwt_spec = abwt::OrderSpec::parse("id:rev", alphabet);
  const abwt::TransformOutput plain = abwt::bwt_k_naive(w, bwt_spec);
  const abwt::TransformOutput alt = abwt::abwt_sentinel_free(w);
  std::printf("bwt(%s)  = %s  I=%zu\n", w.c_str(), plain.last_column.c_str(),
              plain.row_index);
  std::printf("abwt(%s) = %s  I=%zu\n", w.c_str(), alt.last_column.c_str(),
              alt.row_index);

  // Inversion walks the LF orbit; the alternating flavor flips direction.
  const std::string back = abwt::invert_fast(alt, abwt::InverseMode::abwt);
  std::printf("inverse  = %s\n", back.c_str());

  // Counting is circular: "na" occurs twice around the cycle.
  const abwt::AbwtIndex index = abwt::AbwtIndex::build(w, /*store_positions=*/true);
  std::printf("count(na) = %llu at", (unsigned long long)index.count("na"));
  for (abwt::index_t p : index.locate("na")) std::printf(" %u", p);
  std::printf("\n");

  // The alternating-least rotation, found in linear time.
  const abwt::GaloisRotation g = abwt::find_galois_rotation(w);
  std::printf("galois rotation = %s (shift %zu, %llu comparisons)\n",
              abwt::rotate(w, g.shift).c_str(), g.shift,
              (unsigned long long)g.comparisons);

  // Output runs stay within twice the input runs.
  const abwt::RunBoundReport rb = abwt::check_run_bound(w, abwt_spec);
  std::printf("runs: out=%zu in=%zu holds=%s\n", rb.rho_out, rb.rho_in,
              rb.holds ? "yes" : "no");

  // Context blocks of the reversed word factor its first-order entropy.
  const abwt::EntropyFactorizationReport ef =
      abwt::check_entropy_factorization(w, abwt_spec, 1);
  std::printf("entropy: lhs=%.6f rhs=%.6f equal=%s\n", ef.lhs, ef.rhs,
              ef.equal ? "yes" : "no");
  return 0;
}
