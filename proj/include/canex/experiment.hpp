#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "canex/classical.hpp"
#include "canex/core.hpp"
#include "canex/intuition.hpp"

namespace canex {

struct ClassifyOptions {
  std::size_t maxVars = kDefaultMaxVars;
  IntuitOptions intuition;
};

/// Intuitionistic cascade and classical decision on the same expression.
struct Classification {
  IntuitVerdict intuition;
  TautologyStatus tautology;
  bool gkzSimpleNonTautology = false;
  bool simpleAntilogy = false;  // decided by the antilogy filter
};

Classification classify(TermView e, const ClassifyOptions& options = {});

/// Flat JSON object with every verdict; the witness only when requested.
nlohmann::json toJson(const Classification& c, bool withWitness = false);

inline constexpr std::uint64_t kDefaultSeed = 20210501;

struct ExperimentConfig {
  std::size_t n = 100;
  std::size_t count = 20000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t maxVars = kDefaultMaxVars;
  std::size_t workers = 1;
  IntuitOptions intuition;
  /// When false, elapsedSeconds is reported as 0 so reports are byte-stable.
  bool recordTiming = true;
};

struct ExperimentReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t nSamples = 0;
  std::size_t nSimple = 0;
  std::size_t nMP = 0;
  std::size_t nEasy = 0;
  std::size_t nMinor = 0;
  std::size_t nCheap = 0;
  std::size_t nTautology = 0;
  std::size_t nCheapAndTautology = 0;
  std::size_t nGKZSimpleNonTaut = 0;
  std::size_t nAntilogy = 0;
  std::size_t nUnknown = 0;
  /// Samples whose status needed the falsification search.
  std::size_t nSearched = 0;
  /// Samples searched on the index-collapsed expression.
  std::size_t nCollapsed = 0;
  /// Cheap samples left Unknown by the classical pipeline.
  std::size_t nCheapUnknown = 0;
  /// Cheap samples refuted classically; nonzero means an unsound verdict.
  std::size_t nCheapRefuted = 0;
  double elapsedSeconds = 0.0;

  void add(const Classification& c);
  void merge(const ExperimentReport& other);

  double cheapOverTautology() const noexcept;
  /// nSimple / (nSamples - nGKZSimpleNonTaut).
  double gkzRatio() const noexcept;
  /// R_n = nSimple / nSamples.
  double simpleRate() const noexcept;
  double tautologyRate() const noexcept;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Samples cfg.count expressions (sample i uses Rng::forSample(seed, i)),
/// classifies each and aggregates. Identical for any worker count. When
/// `jsonl` is given, one line per sample is written in index order.
ExperimentReport runExperiment(const ExperimentConfig& cfg, std::ostream* jsonl = nullptr);

/// The sample drawn for index `i` of an experiment.
CanonicalExpression sampleAt(std::uint64_t seed, std::uint64_t index, std::size_t n);

std::string csvHeader();
std::string csvRow(const ExperimentReport& r);
void emitReport(const ExperimentReport& r, std::ostream& csv, bool withHeader = true);

/// Re-classifies a JSONL dump written by runExperiment.
ExperimentReport reclassifyDump(std::istream& jsonl, const ClassifyOptions& options = {});

/// Ratio of simple theorems among uniform samples of each size.
struct SimpleRateRow {
  std::size_t n = 0;
  std::size_t count = 0;
  std::size_t nSimple = 0;
  double logNOverN = 0.0;
  double simpleRate() const noexcept;
};

std::vector<SimpleRateRow> simpleRateTable(const std::vector<std::size_t>& sizes, std::size_t count,
                                           std::uint64_t seed, std::size_t workers);
std::string simpleRateCsvHeader();
std::string simpleRateCsvRow(const SimpleRateRow& row);

inline const std::vector<std::size_t> kSimpleRateSizes{25, 50, 100, 500, 1000};

}  // namespace canex
