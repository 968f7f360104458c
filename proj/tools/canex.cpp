// canex: sample, classify and count canonical implicational expressions.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "canex/classical.hpp"
#include "canex/core.hpp"
#include "canex/count.hpp"
#include "canex/experiment.hpp"
#include "canex/oracle.hpp"
#include "canex/randgen.hpp"

namespace {

using namespace canex;

std::string formatLog10(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  return buffer;
}

int runSample(std::size_t n, std::size_t count, std::uint64_t seed, const std::string& format) {
  const auto table = sharedStamTable(n);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::forSample(seed, i);
    const CanonicalExpression e = randomCanonical(rng, n, *table);
    if (format == "json") std::cout << toJson(e).dump() << '\n';
    else std::cout << render(e) << '\n';
  }
  return 0;
}

int runClassify(const std::string& text, bool canonicalizeInput, const ClassifyOptions& options,
                bool witness, bool prove) {
  const CanonicalExpression e = canonicalizeInput ? parseCanonicalizing(text) : parse(text);
  const Term t = e.toTerm();
  nlohmann::json j{{"expr", render(t)}, {"size", e.size()}};
  j.update(toJson(classify(t, options), witness));
  if (prove) j["intuitionistic"] = proveIntuitionistic(t);
  std::cout << j.dump() << '\n';
  return 0;
}

int runExperimentCommand(const ExperimentConfig& cfg, const std::string& outCsv,
                         const std::string& dumpJsonl) {
  std::unique_ptr<std::ofstream> dump;
  if (!dumpJsonl.empty()) {
    dump = std::make_unique<std::ofstream>(dumpJsonl);
    if (!*dump) throw std::runtime_error("cannot open " + dumpJsonl);
  }
  const ExperimentReport r = runExperiment(cfg, dump.get());
  if (dump && !dump->flush()) throw std::runtime_error("write failed: " + dumpJsonl);

  if (outCsv.empty()) {
    emitReport(r, std::cout);
  } else {
    std::ofstream csv(outCsv);
    if (!csv) throw std::runtime_error("cannot open " + outCsv);
    emitReport(r, csv);
    if (!csv.flush()) throw std::runtime_error("write failed: " + outCsv);
  }
  std::cerr << "samples=" << r.nSamples << " tautologies=" << r.nTautology << " cheap=" << r.nCheap
            << " cheap&taut=" << r.nCheapAndTautology << " searched=" << r.nSearched
            << " collapsed=" << r.nCollapsed << " unknown=" << r.nUnknown
            << " cheap-unknown=" << r.nCheapUnknown << " cheap-refuted=" << r.nCheapRefuted << '\n';
  return 0;
}

int runEnumerate(std::size_t n, bool withClassification, const ClassifyOptions& options) {
  EnumerationCursor cursor(n);
  std::vector<Var> tokens;
  std::size_t index = 0;
  while (cursor.nextTerm(tokens)) {
    nlohmann::json j{{"index", index++}, {"expr", render(tokens)}};
    if (withClassification) {
      j.update(toJson(classify(tokens, options)));
      j["intuitionistic"] = proveIntuitionistic(tokens);
    }
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int runCount(std::size_t n) {
  std::cout << "n,catalan,bell,canonical,log10Asymptotic\n";
  std::cout << n << ',' << catalan(n - 1) << ',' << bell(n) << ',' << countCanonical(n) << ','
            << (n >= 2 ? formatLog10(asymptoticCanonical(n)) : std::string("nan")) << '\n';
  return 0;
}

int runRnTable(const std::vector<std::size_t>& sizes, std::size_t count, std::uint64_t seed,
               std::size_t workers) {
  std::cout << simpleRateCsvHeader() << '\n';
  for (const auto& row : simpleRateTable(sizes, count, seed, workers))
    std::cout << simpleRateCsvRow(row) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform canonical implicational expressions and their classification"};
  app.require_subcommand(1);

  std::size_t n = 100;
  std::size_t sampleCount = 1;
  std::size_t experimentCount = 20000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t maxVars = kDefaultMaxVars;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  bool generalizedMP = false;

  auto* sample = app.add_subcommand("sample", "Emit uniform random canonical expressions");
  std::string format = "text";
  sample->add_option("--n", n, "Size (number of leaves)")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", sampleCount, "Number of expressions")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Base seed");
  sample->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* classifyCmd = app.add_subcommand("classify", "Classify one expression");
  std::string expr;
  bool canonicalizeInput = false;
  bool witness = false;
  bool prove = false;
  classifyCmd->add_option("--expr", expr, "Expression, e.g. \"a1->a0->a0\"")->required();
  classifyCmd->add_flag("--canonicalize", canonicalizeInput, "Renumber variables canonically");
  classifyCmd->add_option("--max-vars", maxVars, "Variable cap for falsification")->check(CLI::PositiveNumber);
  classifyCmd->add_flag("--witness", witness, "Include the falsifying valuation");
  classifyCmd->add_flag("--prove", prove, "Also run the complete intuitionistic prover");
  classifyCmd->add_flag("--generalized-mp", generalizedMP, "Accept A and A->goal for any A");

  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo classification experiment");
  std::string outCsv;
  std::string dumpJsonl;
  bool noTiming = false;
  experiment->add_option("--n", n, "Size")->check(CLI::PositiveNumber);
  experiment->add_option("--count", experimentCount, "Samples")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", seed, "Base seed");
  experiment->add_option("--max-vars", maxVars, "Variable cap for falsification")->check(CLI::PositiveNumber);
  experiment->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--out-csv", outCsv, "CSV summary path (default stdout)");
  experiment->add_option("--dump-jsonl", dumpJsonl, "Per-sample JSONL dump path");
  experiment->add_flag("--no-timing", noTiming, "Report elapsedSeconds as 0");
  experiment->add_flag("--generalized-mp", generalizedMP, "Accept A and A->goal for any A");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every canonical expression of a size");
  bool withClassification = false;
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::Range(std::size_t{1}, kMaxEnumerationSize));
  enumerate->add_flag("--classify", withClassification, "Add classification columns");
  enumerate->add_option("--max-vars", maxVars, "Variable cap for falsification")->check(CLI::PositiveNumber);

  auto* countCmd = app.add_subcommand("count", "Exact and asymptotic counts");
  countCmd->add_option("--n", n, "Size")->required()->check(CLI::PositiveNumber);

  auto* rntable = app.add_subcommand("rntable", "Ratio of simple theorems per size");
  std::vector<std::size_t> sizes = kSimpleRateSizes;
  std::size_t rnCount = 10000;
  rntable->add_option("--sizes", sizes, "Sizes")->check(CLI::PositiveNumber);
  rntable->add_option("--count", rnCount, "Samples per size")->check(CLI::PositiveNumber);
  rntable->add_option("--seed", seed, "Base seed");
  rntable->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    ClassifyOptions options{maxVars, IntuitOptions{generalizedMP}};
    if (*sample) return runSample(n, sampleCount, seed, format);
    if (*classifyCmd) return runClassify(expr, canonicalizeInput, options, witness, prove);
    if (*experiment) {
      ExperimentConfig cfg;
      cfg.n = n;
      cfg.count = experimentCount;
      cfg.seed = seed;
      cfg.maxVars = maxVars;
      cfg.workers = workers;
      cfg.intuition.generalizedMP = generalizedMP;
      cfg.recordTiming = !noTiming;
      return runExperimentCommand(cfg, outCsv, dumpJsonl);
    }
    if (*enumerate) return runEnumerate(n, withClassification, options);
    if (*countCmd) return runCount(n);
    if (*rntable) return runRnTable(sizes, rnCount, seed, workers);
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const CanonicalityError& e) {
    std::cerr << "canonicality error: " << e.what() << " (use --canonicalize)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
