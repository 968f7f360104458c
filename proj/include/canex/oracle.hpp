#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "canex/core.hpp"

namespace canex {

/// Largest size accepted by the exhaustive enumerators (K_9 = 30 240 210).
inline constexpr std::size_t kMaxEnumerationSize = 9;

/// All shapes with n leaves: left subtree size ascending, then recursively.
std::vector<TreeShape> enumerateTrees(std::size_t n);
/// All growth strings of length n in lexicographic order.
std::vector<GrowthString> enumerateGrowthStrings(std::size_t n);

/// Walks trees x growth strings, tree-major. Visits each canonical
/// expression of size n exactly once.
class EnumerationCursor {
 public:
  /// Throws std::invalid_argument for n == 0 or n > kMaxEnumerationSize.
  explicit EnumerationCursor(std::size_t n);

  std::optional<CanonicalExpression> next();
  /// Token form of the next expression, without building a CanonicalExpression.
  bool nextTerm(std::vector<Var>& tokens);

  std::size_t size() const noexcept { return n_; }
  std::size_t treeIndex() const noexcept { return treeIndex_; }
  std::size_t partitionIndex() const noexcept { return rgsIndex_; }

 private:
  std::size_t n_;
  std::vector<TreeShape> trees_;
  std::vector<GrowthString> strings_;
  std::size_t treeIndex_ = 0;
  std::size_t rgsIndex_ = 0;
};

/// Calls f on every canonical expression of size n, in cursor order.
void forEachCanonical(std::size_t n, const std::function<void(TermView)>& f);

/// Complete decision procedure for intuitionistic implicational logic:
/// contraction-free sequent calculus (atomic and nested-implication left
/// rules), memoized on sequents.
bool proveIntuitionistic(TermView e);

/// Independent cross-check: goal-directed search for normal natural
/// deduction proofs, with loop checking on the current branch and a depth
/// bound. False can also mean the bound was hit.
bool proveNaturalDeduction(TermView e, std::size_t maxDepth = 64);

inline constexpr std::size_t kMaxTruthTableVars = 20;

/// Evaluates all 2^m assignments, 64 per pass. Throws std::invalid_argument
/// beyond kMaxTruthTableVars distinct variables.
bool truthTableTautology(TermView e);

/// Evaluates e on 64 assignments at once: lane j of words[v] is the value
/// of variable v in assignment j.
std::uint64_t evaluateLanes(TermView e, std::span<const std::uint64_t> words);

/// Pearson statistic sum (o - e)^2 / e. Throws std::invalid_argument on a
/// length mismatch or a non-positive expected count.
double chiSquare(std::span<const double> observed, std::span<const double> expected);

}  // namespace canex
