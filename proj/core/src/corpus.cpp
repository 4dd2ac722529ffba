#include "valext/corpus.hpp"

#include "valext/errors.hpp"
#include "valext/poly_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <istream>
#include <sstream>

namespace valext {

CorpusCase parse_corpus_case(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON record: ") + e.what());
  }
  CorpusCase c;
  std::string base = j.value("base", "q");
  if (base == "q")
    c.base = BaseKind::PAdic;
  else if (base == "fpt")
    c.base = BaseKind::TAdic;
  else
    throw Error("unknown base '" + base + "'");
  if (!j.contains("p") || !j["p"].is_number_unsigned()) throw Error("missing prime 'p'");
  c.p = j["p"].get<std::uint64_t>();
  if (!j.contains("poly") || !j["poly"].is_string()) throw Error("missing 'poly'");
  c.poly = j["poly"].get<std::string>();
  c.options.seed = j.value("seed", 0ULL);
  c.options.max_augmentations = j.value("max_aug", 0);
  c.options.check_invariants = j.value("check_invariants", true);
  if (!j.contains("expect") || !j["expect"].is_array()) throw Error("missing 'expect' array");
  for (const auto& e : j["expect"]) {
    c.expect.push_back({e.value("e", 1L), e.value("f", 1L), e.value("d", 1L)});
  }
  return c;
}

namespace {

CorpusOutcome run_one(int line_no, const std::string& line) {
  CorpusOutcome out;
  out.line = line_no;
  try {
    CorpusCase c = parse_corpus_case(line);
    BaseValuation v(c.base, c.p);
    BasePoly f = parse_poly(c.poly, v);
    ExtensionReport rep = enumerate_extensions(f, v, c.options);
    std::vector<std::array<long, 3>> got;
    got.reserve(rep.leaves.size());
    for (const auto& leaf : rep.leaves) got.push_back({leaf.e, leaf.f, leaf.d});
    auto expected = c.expect;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    std::ostringstream os;
    for (const auto& t : got) os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
    if (got == expected) {
      out.pass = true;
      out.detail = os.str();
    } else {
      out.pass = false;
      out.detail = "expected multiset differs; observed " + os.str();
    }
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

CorpusSummary run_corpus(std::istream& in, bool parallel) {
  std::vector<std::string> lines;
  std::string line;
  int ln = 0;
  std::vector<int> line_numbers;
  while (std::getline(in, line)) {
    ++ln;
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    lines.push_back(line);
    line_numbers.push_back(ln);
  }

  CorpusSummary summary;
  summary.outcomes.resize(lines.size());
  if (parallel && lines.size() > 1) {
    std::vector<std::future<CorpusOutcome>> futs;
    futs.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
      futs.push_back(std::async(std::launch::async,
                                [&, i] { return run_one(line_numbers[i], lines[i]); }));
    for (std::size_t i = 0; i < futs.size(); ++i) summary.outcomes[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i)
      summary.outcomes[i] = run_one(line_numbers[i], lines[i]);
  }
  for (const auto& o : summary.outcomes) (o.pass ? summary.passed : summary.failed)++;
  return summary;
}

}  // namespace valext
