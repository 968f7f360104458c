#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

#include "canex/experiment.hpp"
#include "canex/oracle.hpp"

using namespace canex;

namespace {

ExperimentConfig smallConfig() {
  ExperimentConfig cfg;
  cfg.n = 40;
  cfg.count = 600;
  cfg.seed = 77;
  cfg.recordTiming = false;
  return cfg;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("classify examples") {
  const Classification simple = classify(parseTerm("a1->a0->a0"));
  CHECK(simple.intuition.simple);
  CHECK(simple.intuition.cheap);
  CHECK((simple.tautology.verdict == Verdict::Tautology));

  const Classification peirce = classify(parseTerm("((a1->a0)->a1)->a1"));
  CHECK_FALSE(peirce.intuition.cheap);
  CHECK((peirce.tautology.verdict == Verdict::Tautology));

  const Classification anti = classify(parseTerm("a1->a0"));
  CHECK_FALSE(anti.intuition.cheap);
  CHECK((anti.tautology.verdict == Verdict::NotTautology));
  CHECK(anti.simpleAntilogy);
  CHECK(anti.gkzSimpleNonTautology);

  const nlohmann::json j = toJson(anti, true);
  CHECK(j.at("status").get<std::string>() == "not-tautology");
  CHECK(j.at("certificate").get<std::string>() == "antilogy");
  CHECK(j.at("witness") == nlohmann::json{{"a0", false}, {"a1", true}});
  CHECK_FALSE(toJson(anti).contains("witness"));
}

TEST_CASE("reports do not depend on the worker count") {
  ExperimentConfig cfg = smallConfig();
  const ExperimentReport one = runExperiment(cfg);
  for (std::size_t workers : {4u, 8u}) {
    cfg.workers = workers;
    const ExperimentReport many = runExperiment(cfg);
    CHECK(many == one);
    CHECK(csvRow(many) == csvRow(one));
  }
}

TEST_CASE("count consistency") {
  const ExperimentReport r = runExperiment(smallConfig());
  CHECK(r.nSamples == 600);
  CHECK(r.nSimple <= r.nEasy);
  CHECK(r.nMP <= r.nEasy);
  CHECK(r.nEasy <= r.nCheap);
  CHECK(r.nCheapAndTautology <= std::min(r.nCheap, r.nTautology));
  CHECK(r.nCheapRefuted == 0);
  CHECK(r.nCheapAndTautology + r.nCheapUnknown == r.nCheap);
  CHECK(r.nGKZSimpleNonTaut <= r.nAntilogy);
  CHECK(r.nTautology + r.nUnknown <= r.nSamples);
  CHECK(r.simpleRate() == doctest::Approx(static_cast<double>(r.nSimple) / 600.0));
}

TEST_CASE("jsonl dump lists every sample once and reclassifies identically") {
  const ExperimentConfig cfg = smallConfig();
  std::stringstream dump;
  const ExperimentReport r = runExperiment(cfg, &dump);

  std::set<std::size_t> indices;
  std::stringstream copy(dump.str());
  std::size_t lines = 0;
  for (std::string line; std::getline(copy, line);) {
    const auto j = nlohmann::json::parse(line);
    const std::size_t index = j.at("index");
    CHECK(indices.insert(index).second);
    CHECK(j.at("expr").get<std::string>() == render(sampleAt(cfg.seed, index, cfg.n)));
    ++lines;
  }
  CHECK(lines == cfg.count);
  CHECK(*indices.rbegin() == cfg.count - 1);

  ExperimentReport again = reclassifyDump(dump);
  again.seed = r.seed;
  CHECK(again == r);
}

TEST_CASE("single sample csv") {
  ExperimentConfig cfg = smallConfig();
  cfg.count = 1;
  std::ostringstream out;
  emitReport(runExperiment(cfg), out);
  std::istringstream in(out.str());
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(header == csvHeader());
  const auto cells = split(row);
  REQUIRE(cells.size() == split(header).size());
  CHECK(cells[0] == "40");
  CHECK(cells[1] == "1");
  CHECK(cells[2] == "77");
  for (std::size_t i = 3; i <= 11; ++i) CHECK((cells[i] == "0" || cells[i] == "1"));
  CHECK(cells.back() == "0.000");
}

TEST_CASE("csv header") {
  CHECK(csvHeader() ==
        "n,count,seed,nSimple,nMP,nEasy,nCheap,nTautology,nCheapAndTaut,nGKZSimpleNonTaut,nAntilogy,"
        "nUnknown,ratioCheapOverTaut,gkzRatio,simpleRate,elapsedSeconds");
  ExperimentReport empty;
  CHECK(split(csvRow(empty))[12] == "nan");
}

TEST_CASE("simple rate table uses the experiment samples") {
  const ExperimentConfig cfg = smallConfig();
  const ExperimentReport r = runExperiment(cfg);
  const auto rows = simpleRateTable({cfg.n}, cfg.count, cfg.seed, 3);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].nSimple == r.nSimple);
  CHECK(rows[0].simpleRate() == r.simpleRate());
  CHECK(rows[0].logNOverN == doctest::Approx(std::log(40.0) / 40.0));
  CHECK(split(simpleRateCsvRow(rows[0])).size() == split(simpleRateCsvHeader()).size());
}

TEST_CASE("invalid configurations") {
  ExperimentConfig cfg = smallConfig();
  cfg.count = 0;
  CHECK_THROWS_AS(runExperiment(cfg), std::invalid_argument);
  cfg = smallConfig();
  cfg.maxVars = 0;
  CHECK_THROWS_AS(runExperiment(cfg), std::invalid_argument);
}
