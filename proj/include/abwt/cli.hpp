#pragma once

// Command-line front end. Every subcommand is batch-oriented: read
// files, write files or line-oriented key=value text, exit. Exit codes:
// 0 success, 2 usage error (bad flags, unparseable order), 3 data error
// (unreadable files, invalid payloads, words outside a command's domain).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "abwt/dcsort.hpp"
#include "abwt/fmindex.hpp"
#include "abwt/galois.hpp"
#include "abwt/lfmap.hpp"
#include "abwt/orders.hpp"
#include "abwt/rankinv.hpp"
#include "abwt/reference.hpp"
#include "abwt/stats.hpp"

namespace abwt::cli {

namespace detail {

// Raised for mistakes in how the tool was invoked, as opposed to bad
// input data; run() maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("cannot read " + path);
  return std::move(buf).str();
}

inline void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

inline OrderSpec parse_order_flag(const std::string& text, const Alphabet& alphabet) {
  try {
    return OrderSpec::parse(text, alphabet);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--order " + text + ": " + e.what());
  }
}

// Sidecar format: one key=value per line; keys n, I, K, sentinel.
struct Metadata {
  std::uint64_t n = 0;
  std::uint64_t row_index = 0;
  std::string order_text;
  bool sentinel_appended = false;

  std::string to_text() const {
    std::ostringstream out;
    out << "n=" << n << '\n'
        << "I=" << row_index << '\n'
        << "K=" << order_text << '\n'
        << "sentinel=" << (sentinel_appended ? 1 : 0) << '\n';
    return std::move(out).str();
  }

  static Metadata parse(const std::string& text, const std::string& path) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error(path + ": malformed line: " + line);
      kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* key : {"n", "I", "K"})
      if (!kv.count(key))
        throw std::runtime_error(path + ": missing key " + key);
    Metadata m;
    try {
      m.n = std::stoull(kv.at("n"));
      m.row_index = std::stoull(kv.at("I"));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ": n and I must be unsigned integers");
    }
    m.order_text = kv.at("K");
    if (kv.count("sentinel")) {
      const std::string& s = kv.at("sentinel");
      if (s != "0" && s != "1")
        throw std::runtime_error(path + ": sentinel must be 0 or 1");
      m.sentinel_appended = (s == "1");
    }
    return m;
  }
};

// True if the word's only terminator byte is its last one.
inline bool terminator_is_trailing(std::string_view w) {
  const std::size_t pos = w.find(static_cast<char>(sentinel_byte));
  return pos == w.size() - 1;
}

struct TransformArgs {
  std::string input, output, order = "id:rev", sentinel = "auto";
  bool naive = false;
};

inline int cmd_transform(const TransformArgs& a) {
  std::string w = read_file(a.input);
  if (w.empty()) throw std::runtime_error(a.input + ": empty input");

  const bool has_terminator =
      w.find(static_cast<char>(sentinel_byte)) != std::string::npos;
  bool appended = false;
  if (a.sentinel == "forbid") {
    if (has_terminator)
      throw std::runtime_error(a.input + ": terminator byte present but forbidden");
  } else if (has_terminator) {
    if (!terminator_is_trailing(w))
      throw std::runtime_error(a.input + ": terminator byte must be unique and final");
  } else if (a.sentinel == "require") {
    throw std::runtime_error(a.input + ": terminator byte required but absent");
  } else {
    w.push_back(static_cast<char>(sentinel_byte));
    appended = true;
  }

  const Alphabet alphabet = Alphabet::from_word(w);
  const OrderSpec spec = parse_order_flag(a.order, alphabet);

  TransformOutput t;
  if (a.naive || !spec.is_abwt()) {
    t = bwt_k_naive(w, spec);
  } else if (has_terminator || appended) {
    t = abwt_from_suffixes(w, alt_suffix_array_dc(w));
  } else {
    t = abwt_sentinel_free(w);
  }

  const std::string out = a.output.empty() ? a.input + ".abwt" : a.output;
  write_file(out, t.last_column);
  Metadata m;
  m.n = t.last_column.size();
  m.row_index = t.row_index;
  m.order_text = spec.to_text();
  m.sentinel_appended = appended;
  write_file(out + ".meta", m.to_text());
  std::cout << "payload=" << out << '\n' << "I=" << t.row_index << '\n';
  return 0;
}

struct InvertArgs {
  std::string payload, meta, output;
};

inline int cmd_invert(const InvertArgs& a) {
  const std::string meta_path = a.meta.empty() ? a.payload + ".meta" : a.meta;
  const std::string bytes = read_file(a.payload);
  const Metadata m = Metadata::parse(read_file(meta_path), meta_path);
  if (m.n != bytes.size())
    throw std::runtime_error(meta_path + ": n does not match the payload length");
  if (m.row_index >= bytes.size())
    throw std::runtime_error(meta_path + ": I is out of range");

  const Alphabet alphabet = Alphabet::from_word(bytes);
  const OrderSpec spec = OrderSpec::parse(m.order_text, alphabet);
  TransformOutput t{bytes, static_cast<std::size_t>(m.row_index)};

  std::string w;
  if (spec.is_bwt())
    w = invert_fast(t, InverseMode::bwt);
  else if (spec.is_abwt())
    w = invert_fast(t, InverseMode::abwt);
  else
    w = invert_generic(t, spec);

  if (m.sentinel_appended) {
    if (w.empty() || static_cast<unsigned char>(w.back()) != sentinel_byte)
      throw std::runtime_error("inverted word lacks the appended terminator");
    w.pop_back();
  }

  std::string out = a.output;
  if (out.empty()) {
    constexpr std::string_view suffix = ".abwt";
    if (a.payload.size() > suffix.size() && a.payload.ends_with(suffix))
      out = a.payload.substr(0, a.payload.size() - suffix.size()) + ".word";
    else
      out = a.payload + ".word";
  }
  write_file(out, w);
  std::cout << "word=" << out << '\n';
  return 0;
}

struct IndexArgs {
  std::string input, output;
  bool locate = false;
};

inline int cmd_index(const IndexArgs& a) {
  const std::string w = read_file(a.input);
  const AbwtIndex idx = AbwtIndex::build(w, a.locate);
  const std::string out = a.output.empty() ? a.input + ".idx" : a.output;
  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + out + " for writing");
  idx.serialize(os);
  if (!os) throw std::runtime_error("cannot write " + out);
  std::cout << "index=" << out << '\n' << "n=" << idx.size() << '\n';
  return 0;
}

struct SearchArgs {
  std::string index, pattern;
  bool locate = false;
};

inline int cmd_search(const SearchArgs& a) {
  std::ifstream is(a.index, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + a.index);
  const AbwtIndex idx = AbwtIndex::deserialize(is);
  std::cout << "count=" << idx.count(a.pattern) << '\n';
  if (a.locate)
    for (index_t p : idx.locate(a.pattern)) std::cout << "pos=" << p << '\n';
  return 0;
}

struct GaloisArgs {
  std::string input;
};

inline int cmd_galois(const GaloisArgs& a) {
  const std::string w = read_file(a.input);
  const GaloisRotation g = find_galois_rotation(w);
  std::cout << "shift=" << g.shift << '\n'
            << "comparisons=" << g.comparisons << '\n'
            << "rotation=" << rotate(w, g.shift) << '\n'
            << "galois=" << (g.shift == 0 ? "yes" : "no") << '\n';
  return 0;
}

struct StatsArgs {
  std::string input, order = "id:rev";
  std::size_t r = 1;
};

inline int cmd_stats(const StatsArgs& a) {
  const std::string w = read_file(a.input);
  if (w.empty()) throw std::runtime_error(a.input + ": empty input");
  const Alphabet alphabet = Alphabet::from_word(w);
  const OrderSpec spec = parse_order_flag(a.order, alphabet);

  std::cout << "n=" << w.size() << '\n' << "rho=" << rle(w).rho() << '\n';
  char line[128];
  for (std::size_t k = 0; k <= 4; ++k) {
    std::snprintf(line, sizeof line, "h%zu=%.12g", k, hk(w, k));
    std::cout << line << '\n';
  }
  if (a.r > 4) {
    std::snprintf(line, sizeof line, "h%zu=%.12g", a.r, hk(w, a.r));
    std::cout << line << '\n';
  }

  if (w.size() <= 2000) {
    try {
      const RunBoundReport rb = check_run_bound(w, spec);
      std::cout << "run_bound: rho_out=" << rb.rho_out << " rho_in=" << rb.rho_in
                << " bound=" << 2 * rb.rho_in << " holds=" << (rb.holds ? "yes" : "no")
                << '\n';
    } catch (const std::invalid_argument& e) {
      std::cout << "run_bound: skipped (" << e.what() << ")\n";
    }
  } else if (spec.is_abwt()) {
    try {
      TransformOutput t;
      if (w.find(static_cast<char>(sentinel_byte)) != std::string::npos)
        t = abwt_from_suffixes(w, alt_suffix_array_dc(w));
      else
        t = abwt_sentinel_free(w);
      const std::size_t rho_out = rle(t.last_column).rho();
      const std::size_t rho_in = rle(w).rho();
      std::cout << "run_bound: rho_out=" << rho_out << " rho_in=" << rho_in
                << " bound=" << 2 * rho_in
                << " holds=" << (rho_out <= 2 * rho_in ? "yes" : "no") << '\n';
    } catch (const std::invalid_argument& e) {
      std::cout << "run_bound: skipped (" << e.what() << ")\n";
    }
  } else {
    std::cout << "run_bound: skipped (input too long for a non-alternating order)\n";
  }

  try {
    const EntropyFactorizationReport ef = check_entropy_factorization(w, spec, a.r);
    std::snprintf(line, sizeof line, "entropy: r=%zu lhs=%.12g rhs=%.12g equal=%s",
                  a.r, ef.lhs, ef.rhs, ef.equal ? "yes" : "no");
    std::cout << line << '\n';
  } catch (const std::invalid_argument& e) {
    std::cout << "entropy: skipped (" << e.what() << ")\n";
  }
  return 0;
}

struct SaArgs {
  std::string input, order = "alt";
  bool naive = false;
};

inline int cmd_sa(const SaArgs& a) {
  if (a.order != "alt")
    throw UsageError("--order " + a.order + ": only the alternating order is supported");
  std::string s = read_file(a.input);
  if (s.empty() || static_cast<unsigned char>(s.back()) != sentinel_byte)
    s.push_back(static_cast<char>(sentinel_byte));
  const std::vector<index_t> sa =
      a.naive ? alt_suffix_sort_naive(s) : alt_suffix_array_dc(s);
  for (index_t i : sa) std::cout << i << '\n';
  return 0;
}

struct RankInvArgs {
  std::string order = "id:rev", words_path;
  std::size_t sigma = 3, max_len = 8;
};

inline void print_witness_matrices(const RankInvWitness& wit, const OrderSpec& spec) {
  const std::vector<std::string> m1 = rotation_matrix(wit.word1, spec);
  const std::vector<std::string> m2 = rotation_matrix(wit.word2, spec);
  const auto occurrence_row = [&](const std::vector<std::string>& m) {
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (static_cast<unsigned char>(m[i].back()) == wit.symbol && ++seen == wit.occurrence)
        return i;
    return m.size();
  };
  const std::size_t r1 = occurrence_row(m1), r2 = occurrence_row(m2);
  std::cout << "# row  " << wit.word1 << "  " << wit.word2 << '\n';
  for (std::size_t i = 0; i < m1.size(); ++i) {
    std::cout << "# " << (i < 10 ? "  " : i < 100 ? " " : "") << i << "  " << m1[i]
              << (i == r1 ? '*' : ' ') << ' ' << m2[i] << (i == r2 ? '*' : ' ') << '\n';
  }
}

inline int cmd_rankinv(const RankInvArgs& a) {
  if (a.sigma < 1 || a.sigma > 26)
    throw UsageError("--sigma must be between 1 and 26");
  if (a.max_len < 1 || a.max_len > 255)
    throw UsageError("--max-len must be between 1 and 255");
  const Alphabet alphabet =
      Alphabet::from_symbols(std::string_view("abcdefghijklmnopqrstuvwxyz").substr(0, a.sigma));
  const OrderSpec spec = parse_order_flag(a.order, alphabet);

  Verdict v;
  if (!a.words_path.empty()) {
    std::vector<std::string> words;
    std::istringstream in(read_file(a.words_path));
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) words.push_back(line);
    v = check_rank_invertible_words(spec, words);
  } else {
    v = check_rank_invertible(spec, a.max_len);
  }

  std::cout << "order=" << spec.to_text() << '\n'
            << "rank_invertible=" << (v.rank_invertible ? "yes" : "no") << '\n'
            << "predicted=" << (predict_rank_invertible(spec) ? "yes" : "no") << '\n';
  if (v.witness) {
    const RankInvWitness& w = *v.witness;
    std::cout << "word1=" << w.word1 << '\n' << "word2=" << w.word2 << '\n';
    std::cout << "symbol=" << static_cast<char>(w.symbol) << '\n'
              << "occurrence=" << w.occurrence << '\n'
              << "target1=" << w.target1 << '\n'
              << "target2=" << w.target2 << '\n';
    std::cout << "parikh=";
    for (std::size_t i = 0; i < w.parikh.size(); ++i)
      std::cout << (i ? "," : "") << w.parikh[i];
    std::cout << '\n';
    if (w.word1.size() <= 32) print_witness_matrices(w, spec);
  }
  return 0;
}

}  // namespace detail

// Builds the option tree, parses, and dispatches. Suitable as the whole
// body of main().
inline int run(int argc, char** argv) {
  CLI::App app{"alternating Burrows-Wheeler transform toolkit"};
  app.require_subcommand(1);

  detail::TransformArgs tr;
  CLI::App* c_tr = app.add_subcommand("transform", "transform a word file");
  c_tr->add_option("input", tr.input, "word file")->required()->check(CLI::ExistingFile);
  c_tr->add_option("-o,--output", tr.output, "payload path (default: input + .abwt)");
  c_tr->add_option("--order", tr.order, "permutation list, e.g. id:rev or id:cab");
  c_tr->add_option("--sentinel", tr.sentinel, "terminator handling")
      ->check(CLI::IsMember({"auto", "require", "forbid"}));
  c_tr->add_flag("--naive", tr.naive, "force the reference rotation sort");

  detail::InvertArgs iv;
  CLI::App* c_iv = app.add_subcommand("invert", "rebuild the word from a payload");
  c_iv->add_option("payload", iv.payload, "payload file")->required()->check(CLI::ExistingFile);
  c_iv->add_option("--meta", iv.meta, "sidecar path (default: payload + .meta)");
  c_iv->add_option("-o,--output", iv.output, "output word path");

  detail::IndexArgs ix;
  CLI::App* c_ix = app.add_subcommand("index", "build a searchable index");
  c_ix->add_option("input", ix.input, "word file")->required()->check(CLI::ExistingFile);
  c_ix->add_option("-o,--output", ix.output, "index path (default: input + .idx)");
  c_ix->add_flag("--locate", ix.locate, "store positions for locate queries");

  detail::SearchArgs se;
  CLI::App* c_se = app.add_subcommand("search", "count or locate a pattern");
  c_se->add_option("index", se.index, "index file")->required()->check(CLI::ExistingFile);
  c_se->add_option("pattern", se.pattern, "pattern bytes")->required();
  c_se->add_flag("--locate", se.locate, "list match positions");

  detail::GaloisArgs ga;
  CLI::App* c_ga = app.add_subcommand("galois", "least alternating rotation");
  c_ga->add_option("input", ga.input, "word file")->required()->check(CLI::ExistingFile);

  detail::StatsArgs st;
  CLI::App* c_st = app.add_subcommand("stats", "runs, entropies, and bound checks");
  c_st->add_option("input", st.input, "word file")->required()->check(CLI::ExistingFile);
  c_st->add_option("--order", st.order, "permutation list for the bound checks");
  c_st->add_option("--r", st.r, "context length for the entropy check");

  detail::SaArgs sa;
  CLI::App* c_sa = app.add_subcommand("sa", "alternating suffix array");
  c_sa->add_option("input", sa.input, "word file; terminator appended if absent")
      ->required()
      ->check(CLI::ExistingFile);
  c_sa->add_option("--order", sa.order, "suffix order (only alt)");
  c_sa->add_flag("--naive", sa.naive, "force the quadratic reference sort");

  detail::RankInvArgs ri;
  CLI::App* c_ri = app.add_subcommand("rankinv", "rank-invertibility checker");
  c_ri->add_option("--order", ri.order, "permutation list to test");
  c_ri->add_option("--sigma", ri.sigma, "alphabet size, letters from a");
  c_ri->add_option("--max-len", ri.max_len, "enumerate words up to this length");
  c_ri->add_option("--words", ri.words_path, "file of words to test, one per line")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_tr->parsed()) return detail::cmd_transform(tr);
    if (c_iv->parsed()) return detail::cmd_invert(iv);
    if (c_ix->parsed()) return detail::cmd_index(ix);
    if (c_se->parsed()) return detail::cmd_search(se);
    if (c_ga->parsed()) return detail::cmd_galois(ga);
    if (c_st->parsed()) return detail::cmd_stats(st);
    if (c_sa->parsed()) return detail::cmd_sa(sa);
    if (c_ri->parsed()) return detail::cmd_rankinv(ri);
  } catch (const detail::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace abwt::cli
