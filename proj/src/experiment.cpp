#include "canex/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <thread>

#include "canex/count.hpp"
#include "canex/randgen.hpp"

namespace canex {

Classification classify(TermView e, const ClassifyOptions& options) {
  Classification c;
  c.intuition = isCheap(e, options.intuition);
  c.tautology = isTautology(e, options.maxVars, options.intuition);
  c.gkzSimpleNonTautology = isSimpleNonTautologyGKZ(e);
  c.simpleAntilogy = c.tautology.certificate == Certificate::Antilogy;
  return c;
}

nlohmann::json toJson(const Classification& c, bool withWitness) {
  nlohmann::json j{{"simple", c.intuition.simple},
                   {"mp", c.intuition.mp},
                   {"easy", c.intuition.easy},
                   {"minor", c.intuition.minor},
                   {"cheap", c.intuition.cheap},
                   {"cleaned", render(c.intuition.cleaned)},
                   {"cleanedSize", c.intuition.cleanedSize},
                   {"status", toString(c.tautology.verdict)},
                   {"certificate", toString(c.tautology.certificate)},
                   {"gkzSimpleNonTautology", c.gkzSimpleNonTautology},
                   {"simpleAntilogy", c.simpleAntilogy}};
  if (!c.tautology.reason.empty()) j["reason"] = c.tautology.reason;
  if (withWitness && c.tautology.witness) j["witness"] = c.tautology.witness->toJson();
  return j;
}

// ---------------------------------------------------------------------------
// Report arithmetic

void ExperimentReport::add(const Classification& c) {
  ++nSamples;
  nSimple += c.intuition.simple;
  nMP += c.intuition.mp;
  nEasy += c.intuition.easy;
  nMinor += c.intuition.minor;
  nCheap += c.intuition.cheap;
  const bool taut = c.tautology.verdict == Verdict::Tautology;
  nTautology += taut;
  nCheapAndTautology += c.intuition.cheap && taut;
  nCheapUnknown += c.intuition.cheap && c.tautology.verdict == Verdict::Unknown;
  nCheapRefuted += c.intuition.cheap && c.tautology.verdict == Verdict::NotTautology;
  nGKZSimpleNonTaut += c.gkzSimpleNonTautology;
  nAntilogy += c.simpleAntilogy;
  nUnknown += c.tautology.verdict == Verdict::Unknown;
  nSearched += c.tautology.searched;
  nCollapsed += c.tautology.collapsed;
}

void ExperimentReport::merge(const ExperimentReport& o) {
  nSamples += o.nSamples;
  nSimple += o.nSimple;
  nMP += o.nMP;
  nEasy += o.nEasy;
  nMinor += o.nMinor;
  nCheap += o.nCheap;
  nTautology += o.nTautology;
  nCheapAndTautology += o.nCheapAndTautology;
  nCheapUnknown += o.nCheapUnknown;
  nCheapRefuted += o.nCheapRefuted;
  nGKZSimpleNonTaut += o.nGKZSimpleNonTaut;
  nAntilogy += o.nAntilogy;
  nUnknown += o.nUnknown;
  nSearched += o.nSearched;
  nCollapsed += o.nCollapsed;
}

namespace {

double ratio(std::size_t num, std::size_t den) noexcept {
  return den == 0 ? std::nan("") : static_cast<double>(num) / static_cast<double>(den);
}

// Runs body(index, worker) for every index in [0, count), handing out
// contiguous chunks to `workers` threads.
template <class Body>
void parallelFor(std::size_t count, std::size_t workers, Body body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> nextIndex{0};
  auto run = [&](std::size_t worker) {
    for (;;) {
      std::size_t begin = nextIndex.fetch_add(kChunk);
      if (begin >= count) return;
      std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) body(i, worker);
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
}

std::string formatDouble(double x, int digits) {
  if (std::isnan(x)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, x);
  return buffer;
}

}  // namespace

double ExperimentReport::cheapOverTautology() const noexcept { return ratio(nCheapAndTautology, nTautology); }
double ExperimentReport::gkzRatio() const noexcept { return ratio(nSimple, nSamples - nGKZSimpleNonTaut); }
double ExperimentReport::simpleRate() const noexcept { return ratio(nSimple, nSamples); }
double ExperimentReport::tautologyRate() const noexcept { return ratio(nTautology, nSamples); }

// ---------------------------------------------------------------------------
// Experiment

CanonicalExpression sampleAt(std::uint64_t seed, std::uint64_t index, std::size_t n) {
  Rng rng = Rng::forSample(seed, index);
  return randomCanonical(rng, n, *sharedStamTable(n));
}

ExperimentReport runExperiment(const ExperimentConfig& cfg, std::ostream* jsonl) {
  if (cfg.count == 0) throw std::invalid_argument("experiment: count must be at least 1");
  if (cfg.maxVars == 0) throw std::invalid_argument("experiment: maxVars must be at least 1");
  if (cfg.n == 0) throw std::invalid_argument("experiment: size must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  const auto table = sharedStamTable(cfg.n);
  const ClassifyOptions options{cfg.maxVars, cfg.intuition};
  const std::size_t workers = std::max<std::size_t>(1, cfg.workers);

  std::vector<ExperimentReport> partial(workers);
  std::vector<std::string> lines(jsonl ? cfg.count : 0);

  parallelFor(cfg.count, workers, [&](std::size_t i, std::size_t worker) {
    Rng rng = Rng::forSample(cfg.seed, i);
    const CanonicalExpression e = randomCanonical(rng, cfg.n, *table);
    const Term t = e.toTerm();
    const Classification c = classify(t, options);
    partial[worker].add(c);
    if (jsonl) {
      nlohmann::json j{{"index", i}, {"expr", render(t)}};
      j.update(toJson(c));
      lines[i] = j.dump();
    }
  });

  ExperimentReport report;
  report.n = cfg.n;
  report.seed = cfg.seed;
  for (const auto& p : partial) report.merge(p);
  if (cfg.recordTiming)
    report.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (jsonl)
    for (const auto& line : lines) *jsonl << line << '\n';
  return report;
}

std::string csvHeader() {
  return "n,count,seed,nSimple,nMP,nEasy,nCheap,nTautology,nCheapAndTaut,nGKZSimpleNonTaut,"
         "nAntilogy,nUnknown,ratioCheapOverTaut,gkzRatio,simpleRate,elapsedSeconds";
}

std::string csvRow(const ExperimentReport& r) {
  std::string row;
  for (std::size_t v : {r.n, r.nSamples}) row += std::to_string(v) + ",";
  row += std::to_string(r.seed) + ",";
  for (std::size_t v : {r.nSimple, r.nMP, r.nEasy, r.nCheap, r.nTautology, r.nCheapAndTautology,
                        r.nGKZSimpleNonTaut, r.nAntilogy, r.nUnknown})
    row += std::to_string(v) + ",";
  row += formatDouble(r.cheapOverTautology(), 6) + ",";
  row += formatDouble(r.gkzRatio(), 6) + ",";
  row += formatDouble(r.simpleRate(), 6) + ",";
  row += formatDouble(r.elapsedSeconds, 3);
  return row;
}

void emitReport(const ExperimentReport& r, std::ostream& csv, bool withHeader) {
  if (withHeader) csv << csvHeader() << '\n';
  csv << csvRow(r) << '\n';
}

ExperimentReport reclassifyDump(std::istream& jsonl, const ClassifyOptions& options) {
  ExperimentReport report;
  std::string line;
  while (std::getline(jsonl, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    const CanonicalExpression e = parse(j.at("expr").get<std::string>());
    report.add(classify(e.toTerm(), options));
    report.n = e.size();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Simple-rate table

double SimpleRateRow::simpleRate() const noexcept { return ratio(nSimple, count); }

std::vector<SimpleRateRow> simpleRateTable(const std::vector<std::size_t>& sizes, std::size_t count,
                                           std::uint64_t seed, std::size_t workers) {
  std::vector<SimpleRateRow> rows;
  for (std::size_t n : sizes) {
    const auto table = sharedStamTable(n);
    std::vector<std::size_t> hits(std::max<std::size_t>(1, workers), 0);
    parallelFor(count, workers, [&](std::size_t i, std::size_t worker) {
      Rng rng = Rng::forSample(seed, i);
      hits[worker] += isSimple(randomCanonical(rng, n, *table).toTerm());
    });
    SimpleRateRow row;
    row.n = n;
    row.count = count;
    for (auto h : hits) row.nSimple += h;
    row.logNOverN = std::log(static_cast<double>(n)) / static_cast<double>(n);
    rows.push_back(row);
  }
  return rows;
}

std::string simpleRateCsvHeader() { return "n,logn_over_n,simpleRate,nSimple,count,ratioToLognOverN"; }

std::string simpleRateCsvRow(const SimpleRateRow& row) {
  return std::to_string(row.n) + "," + formatDouble(row.logNOverN, 9) + "," +
         formatDouble(row.simpleRate(), 6) + "," + std::to_string(row.nSimple) + "," +
         std::to_string(row.count) + "," + formatDouble(row.simpleRate() / row.logNOverN, 6);
}

}  // namespace canex
