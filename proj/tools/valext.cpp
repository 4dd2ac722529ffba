// Command line front end: `valext extend` enumerates the extensions of a
// p-adic or t-adic valuation to K[x]/(f); `valext corpus` replays a file of
// line-delimited JSON regression cases.
//
// Exit codes: 0 success, 1 input error, 2 invariant failure, 3 non-termination
// diagnostic.

#include "valext/corpus.hpp"
#include "valext/errors.hpp"
#include "valext/extend.hpp"
#include "valext/poly_io.hpp"
#include "valext/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

std::uint64_t env_seed() {
  const char* s = std::getenv("VALEXT_SEED");
  if (!s) return 0;
  return std::strtoull(s, nullptr, 10);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valext: extensions of a rank-1 discrete valuation to K[x]/(f)"};
  app.require_subcommand(1);

  std::string base = "q";
  std::uint64_t p = 2;
  std::string poly_text;
  std::string format = "table";
  std::uint64_t seed = env_seed();
  int max_aug = 0;
  bool no_invariants = false;
  bool parallel = false;

  CLI::App* cmd_extend = app.add_subcommand("extend", "enumerate all extensions for one polynomial");
  cmd_extend->add_option("--base", base, "base field: q (p-adic) or fpt (t-adic)")
      ->check(CLI::IsMember({"q", "fpt"}));
  cmd_extend->add_option("--p", p, "prime")->required();
  cmd_extend->add_option("--poly", poly_text, "polynomial in x")->required();
  cmd_extend->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  cmd_extend->add_option("--seed", seed, "seed for the residual factorization");
  cmd_extend->add_option("--max-aug", max_aug, "augmentation bound (default 16*deg f)");
  cmd_extend->add_flag("--no-invariants", no_invariants, "skip the per-node assertion suite");
  cmd_extend->add_flag("--parallel", parallel, "explore branches concurrently");

  std::string corpus_path;
  bool corpus_serial = false;
  CLI::App* cmd_corpus = app.add_subcommand("corpus", "run a regression corpus file");
  cmd_corpus->add_option("file", corpus_path, "line-delimited JSON corpus")->required();
  cmd_corpus->add_flag("--serial", corpus_serial, "run cases one at a time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_extend) {
      valext::BaseValuation v(base == "q" ? valext::BaseKind::PAdic : valext::BaseKind::TAdic, p);
      valext::BasePoly f = valext::parse_poly(poly_text, v);
      valext::Options opts;
      opts.seed = seed;
      opts.max_augmentations = max_aug;
      opts.check_invariants = !no_invariants;
      opts.parallel = parallel;
      valext::ExtensionReport report = valext::enumerate_extensions(f, v, opts);
      if (format == "table")
        std::cout << valext::render_table(report);
      else if (format == "json")
        std::cout << valext::render_json(report);
      else
        std::cout << valext::render_dot(report);
      return 0;
    }
    if (*cmd_corpus) {
      std::ifstream in(corpus_path);
      if (!in) {
        std::cerr << "error: cannot open corpus file " << corpus_path << "\n";
        return 1;
      }
      valext::CorpusSummary s = valext::run_corpus(in, !corpus_serial);
      for (const auto& o : s.outcomes)
        std::cout << "line " << o.line << ": " << (o.pass ? "pass " : "FAIL ") << o.detail << "\n";
      std::cout << s.passed << "/" << (s.passed + s.failed) << " pass\n";
      return s.failed == 0 ? 0 : 1;
    }
  } catch (const valext::NonTermination& e) {
    std::cerr << "non-termination: " << e.what() << "\n";
    return 3;
  } catch (const valext::InvariantViolation& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
