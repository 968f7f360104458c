#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "canex/oracle.hpp"
#include "canex/randgen.hpp"

using namespace canex;

namespace {

const RemyVector kSeventeen{1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 6, 12, 10, 15, 3, 16, 14};

template <class Key>
double chiSquareUniform(const std::map<Key, double>& observed, std::size_t bins, double draws) {
  std::vector<double> o, e;
  for (const auto& [key, count] : observed) o.push_back(count);
  o.resize(bins, 0.0);
  e.assign(bins, draws / static_cast<double>(bins));
  return chiSquare(o, e);
}

}  // namespace

TEST_CASE("remy step examples") {
  CHECK(decodeRemyVector(kSeventeen, 9).leafCount() == 9);

  const RemyVector grown = remyStep(kSeventeen, 21);
  CHECK(grown == RemyVector{1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 17, 12, 10, 15, 3, 16, 14, 18, 6});

  const RemyVector above5 = remyStep(kSeventeen, 8);
  REQUIRE(above5.size() == 19);
  CHECK(above5[4] == 17);
  CHECK(above5[17] == 5);
  CHECK(above5[18] == 18);
  CHECK(decodeRemyVector(above5, 10).leafCount() == 10);

  const RemyVector base = remyStep(RemyVector{0}, 0);
  CHECK(base == RemyVector{1, 0, 2});
  CHECK(decodeRemyVector(base, 2) == TreeShape::node(TreeShape::leaf(), TreeShape::leaf()));

  CHECK(remyStep(RemyVector{0}, 1) == RemyVector{1, 2, 0});
  CHECK_THROWS_AS(remyStep(RemyVector{0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(remyStep(kSeventeen, 34), std::invalid_argument);
  CHECK_NOTHROW(remyStep(kSeventeen, 33));
}

TEST_CASE("every insertion keeps a valid tree") {
  for (std::uint64_t x = 0; x <= 33; ++x) {
    const RemyVector v = remyStep(kSeventeen, x);
    CHECK(decodeRemyVector(v, 10).leafCount() == 10);
  }
}

TEST_CASE("random remy vector uses n - 1 draws") {
  for (std::size_t n : {1u, 2u, 10u, 100u}) {
    Rng rng(n);
    const RemyVector v = randomRemyVector(rng, n);
    CHECK(rng.draws() == n - 1);
    CHECK(v.size() == 2 * n - 1);
    const TreeShape t = decodeRemyVector(v, n);
    CHECK(t.leafCount() == n);
    CHECK(t.internalCount() == n - 1);
  }
  Rng rng(3);
  CHECK(randomTree(rng, 1).isLeaf());
}

TEST_CASE("tree shapes are uniform") {
  for (std::size_t n : {3u, 4u, 5u}) {
    Rng rng(100 + n);
    const std::size_t bins = enumerateTrees(n).size();
    const double draws = 5000.0 * static_cast<double>(bins);
    std::map<TreeShape, double> counts;
    for (int i = 0; i < static_cast<int>(draws); ++i) counts[randomTree(rng, n)] += 1;
    CHECK(counts.size() == bins);
    // alpha = 0.001 critical values for 1, 4, 13 degrees of freedom.
    const double critical = n == 3 ? 10.828 : n == 4 ? 18.467 : 34.528;
    CHECK(chiSquareUniform(counts, bins, draws) < critical);
  }
}

TEST_CASE("partitions are uniform") {
  for (std::size_t n : {3u, 4u}) {
    Rng rng(200 + n);
    const StamTable table = stamTable(n);
    const std::size_t bins = enumerateGrowthStrings(n).size();
    const double draws = 5000.0 * static_cast<double>(bins);
    std::map<GrowthString, double> counts;
    for (int i = 0; i < static_cast<int>(draws); ++i) counts[toGrowthString(randomPartition(rng, table))] += 1;
    CHECK(counts.size() == bins);
    const double critical = n == 3 ? 18.467 : 36.123;
    CHECK(chiSquareUniform(counts, bins, draws) < critical);
  }
}

TEST_CASE("partitions of ten elements are uniform") {
  // Bell_10 = 115975 bins, about 20 draws per bin.
  constexpr std::size_t kBins = 115975;
  constexpr std::size_t kDraws = 20 * kBins;
  const StamTable table = stamTable(10);
  Rng rng(410);
  std::unordered_map<std::uint64_t, double> counts;
  for (std::size_t i = 0; i < kDraws; ++i) {
    const GrowthString g = toGrowthString(randomPartition(rng, table));
    std::uint64_t key = 0;
    for (Var v : g.classes()) key = key * 10 + static_cast<std::uint64_t>(v);
    counts[key] += 1;
  }
  CHECK(counts.size() == kBins);
  std::vector<double> observed, expected(kBins, static_cast<double>(kDraws) / kBins);
  for (const auto& [key, c] : counts) observed.push_back(c);
  observed.resize(kBins, 0.0);
  // Wilson-Hilferty upper 0.001 quantile of chi-square with kBins - 1 df.
  const double k = kBins - 1;
  const double z = 3.090232;
  const double critical = k * std::pow(1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k)), 3);
  CHECK(chiSquare(observed, expected) < critical);
}

TEST_CASE("canonical expressions are uniform") {
  for (std::size_t n : {3u, 4u}) {
    Rng rng(300 + n);
    const StamTable table = stamTable(n);
    const std::size_t bins = countCanonical(n).convert_to<std::size_t>();
    const double draws = 1000.0 * static_cast<double>(bins);
    std::map<std::string, double> counts;
    for (int i = 0; i < static_cast<int>(draws); ++i) counts[render(randomCanonical(rng, n, table))] += 1;
    CHECK(counts.size() == bins);
    // 9 and 74 degrees of freedom.
    const double critical = n == 3 ? 27.877 : 117.346;
    CHECK(chiSquareUniform(counts, bins, draws) < critical);
  }
}

TEST_CASE("class descriptions to growth strings") {
  const auto g = [](std::vector<Var> labels) {
    ClassDescription c{std::move(labels), 0};
    for (Var v : c.labels) c.classCount = std::max(c.classCount, v + 1);
    const GrowthString s = toGrowthString(c);
    return std::vector<Var>(s.classes().begin(), s.classes().end());
  };
  CHECK(g({5, 9, 9, 5, 9, 5, 2, 5, 5, 5}) == std::vector<Var>{0, 2, 2, 0, 2, 0, 1, 0, 0, 0});
  CHECK(g({0, 0, 0}) == std::vector<Var>{0, 0, 0});
  CHECK(g({0, 1}) == std::vector<Var>{1, 0});
  const GrowthString reference = canonicalize(std::vector<Var>{0, 1});
  CHECK(g({0, 1}) == std::vector<Var>(reference.classes().begin(), reference.classes().end()));
}

TEST_CASE("partition of one element") {
  const StamTable table = stamTable(1);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) CHECK(toGrowthString(randomPartition(rng, table)) == GrowthString(std::vector<Var>{0}));
}

TEST_CASE("random canonical expressions") {
  const StamTable t1 = stamTable(1);
  Rng rng(1);
  CHECK(render(randomCanonical(rng, 1, t1)) == "a0");

  const StamTable t100 = stamTable(100);
  for (int i = 0; i < 50; ++i) {
    const CanonicalExpression e = randomCanonical(rng, 100, t100);
    CHECK(e.size() == 100);
    CHECK(isValidGrowthString(e.vars.classes()));
  }
  CHECK_THROWS_AS(randomCanonical(rng, 99, t100), std::invalid_argument);
}

TEST_CASE("streams are deterministic and distinct") {
  const StamTable table = stamTable(30);
  Rng a = Rng::forSample(42, 7);
  Rng b = Rng::forSample(42, 7);
  CHECK(randomCanonical(a, 30, table) == randomCanonical(b, 30, table));
  CHECK(streamSeed(42, 7) != streamSeed(42, 8));
  CHECK(streamSeed(42, 7) != streamSeed(43, 7));
}

TEST_CASE("uniform helpers stay in range") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    CHECK(rng.uniformBelow(7) < 7);
    const double u = rng.uniformReal();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(rng.draws() == 20000);
}
