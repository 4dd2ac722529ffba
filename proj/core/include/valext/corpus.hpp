/// \file corpus.hpp
/// Regression corpus runner: line-delimited JSON cases, each an input
/// polynomial plus the expected multiset of (e, f, d) triples.
#pragma once

#include "valext/extend.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace valext {

struct CorpusCase {
  BaseKind base = BaseKind::PAdic;
  std::uint64_t p = 2;
  std::string poly;
  Options options;
  std::vector<std::array<long, 3>> expect;  // (e, f, d) multiset
};

/// Parses one corpus record; throws Error with the offending detail.
CorpusCase parse_corpus_case(const std::string& line);

struct CorpusOutcome {
  int line = 0;
  bool pass = false;
  std::string detail;  // failure explanation or observed triples
};

struct CorpusSummary {
  int passed = 0;
  int failed = 0;
  std::vector<CorpusOutcome> outcomes;  // in input order
};

/// Runs every case (cases may execute concurrently; outcomes are reported in
/// input order). Malformed records count as failures with their line number.
CorpusSummary run_corpus(std::istream& in, bool parallel = true);

}  // namespace valext
