#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "canex/core.hpp"
#include "canex/count.hpp"

namespace canex {

/// SplitMix64 finalizer; the documented mixing function behind stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of the stream owned by sample `index` of an experiment seeded with
/// `base`: mix64(base ^ mix64(index + 0x9E3779B97F4A7C15)).
constexpr std::uint64_t streamSeed(std::uint64_t base, std::uint64_t index) noexcept {
  return mix64(base ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

/// Deterministic 64-bit generator (SplitMix64). Single owner.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}
  static Rng forSample(std::uint64_t base, std::uint64_t index) noexcept {
    return Rng(streamSeed(base, index));
  }

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, bound), by rejection. bound must be positive.
  std::uint64_t uniformBelow(std::uint64_t bound) noexcept {
    ++draws_;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0, 1) from the 53 high bits.
  double uniformReal() noexcept {
    ++draws_;
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Number of uniformBelow/uniformReal calls so far.
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

/// One Remy insertion on a vector describing a tree with `leaves` leaves
/// (entries 0 .. 2*leaves-2 are live). Writes entries 2*leaves-1 and
/// 2*leaves. x in [0, 4*leaves-3]: x/2 picks the node the new internal node
/// 2*leaves-1 goes above; odd x puts the new leaf 2*leaves on the left.
void remyInsert(std::span<std::uint32_t> v, std::size_t leaves, std::uint64_t x);

/// Functional form: `v` encodes L leaves, the result L + 1.
/// Throws std::invalid_argument when x > 4L - 3.
RemyVector remyStep(const RemyVector& v, std::uint64_t x);

/// Uniform Remy vector for n leaves; exactly n - 1 draws.
RemyVector randomRemyVector(Rng& rng, std::size_t n);
/// Uniform over the C_{n-1} shapes with n leaves.
TreeShape randomTree(Rng& rng, std::size_t n);

/// Labels in [0, classCount); the partition is the kernel of the labeling.
struct ClassDescription {
  std::vector<Var> labels;
  Var classCount = 0;
};

/// Stam's sampler: M from the table, then i.i.d. uniform labels in [0, M).
ClassDescription randomPartition(Rng& rng, const StamTable& table);
GrowthString toGrowthString(const ClassDescription& c);

/// Uniform over the K_n canonical expressions of size n = table.n.
CanonicalExpression randomCanonical(Rng& rng, std::size_t n, const StamTable& table);

}  // namespace canex
