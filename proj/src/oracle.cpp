#include "canex/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace canex {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void checkEnumerationSize(std::size_t n) {
  if (n == 0 || n > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration refused: size " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxEnumerationSize) + "]");
}

void growStrings(std::vector<Var>& current, std::size_t pos, Var maxRight,
                 std::vector<GrowthString>& out) {
  if (pos == 0) {
    out.emplace_back(current);
    return;
  }
  for (Var c = 0; c <= maxRight + 1; ++c) {
    current[pos - 1] = c;
    growStrings(current, pos - 1, std::max(maxRight, c), out);
  }
}

}  // namespace

std::vector<TreeShape> enumerateTrees(std::size_t n) {
  checkEnumerationSize(n);
  std::vector<std::vector<TreeShape>> bySize(n + 1);
  bySize[1] = {TreeShape::leaf()};
  for (std::size_t size = 2; size <= n; ++size)
    for (std::size_t left = 1; left < size; ++left)
      for (const auto& l : bySize[left])
        for (const auto& r : bySize[size - left]) bySize[size].push_back(TreeShape::node(l, r));
  return bySize[n];
}

std::vector<GrowthString> enumerateGrowthStrings(std::size_t n) {
  checkEnumerationSize(n);
  std::vector<GrowthString> out;
  std::vector<Var> current(n, 0);
  // The rightmost entry is always 0.
  growStrings(current, n - 1, 0, out);
  std::ranges::sort(out);
  return out;
}

EnumerationCursor::EnumerationCursor(std::size_t n)
    : n_(n), trees_(enumerateTrees(n)), strings_(enumerateGrowthStrings(n)) {}

std::optional<CanonicalExpression> EnumerationCursor::next() {
  if (treeIndex_ >= trees_.size()) return std::nullopt;
  CanonicalExpression e(trees_[treeIndex_], strings_[rgsIndex_]);
  if (++rgsIndex_ == strings_.size()) {
    rgsIndex_ = 0;
    ++treeIndex_;
  }
  return e;
}

bool EnumerationCursor::nextTerm(std::vector<Var>& tokens) {
  if (treeIndex_ >= trees_.size()) return false;
  auto pre = trees_[treeIndex_].preorder();
  const auto& vars = strings_[rgsIndex_];
  tokens.resize(pre.size());
  std::size_t leaf = 0;
  for (std::size_t i = 0; i < pre.size(); ++i) tokens[i] = pre[i] ? kArrow : vars[leaf++];
  if (++rgsIndex_ == strings_.size()) {
    rgsIndex_ = 0;
    ++treeIndex_;
  }
  return true;
}

void forEachCanonical(std::size_t n, const std::function<void(TermView)>& f) {
  EnumerationCursor cursor(n);
  std::vector<Var> tokens;
  while (cursor.nextTerm(tokens)) f(tokens);
}

// ---------------------------------------------------------------------------
// Provers

namespace {

/// Hash-consed formulas: equal subformulas share an id.
class FormulaStore {
 public:
  int atom(Var v) {
    auto [it, fresh] = atoms_.try_emplace(v, static_cast<int>(nodes_.size()));
    if (fresh) nodes_.push_back({-1, -1, v});
    return it->second;
  }

  int arrow(int a, int b) {
    const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                     static_cast<std::uint32_t>(b);
    auto [it, fresh] = arrows_.try_emplace(key, static_cast<int>(nodes_.size()));
    if (fresh) nodes_.push_back({a, b, kArrow});
    return it->second;
  }

  int intern(TermView e) {
    std::vector<int> stack;
    for (std::size_t i = e.size(); i-- > 0;) {
      if (e[i] != kArrow) {
        stack.push_back(atom(e[i]));
        continue;
      }
      int premise = stack.back();
      stack.pop_back();
      int conclusion = stack.back();
      stack.back() = arrow(premise, conclusion);
    }
    return stack.back();
  }

  bool isAtom(int f) const { return nodes_[static_cast<std::size_t>(f)].var != kArrow; }
  int left(int f) const { return nodes_[static_cast<std::size_t>(f)].left; }
  int right(int f) const { return nodes_[static_cast<std::size_t>(f)].right; }

 private:
  struct Node {
    int left;
    int right;
    Var var;
  };
  std::vector<Node> nodes_;
  std::unordered_map<Var, int> atoms_;
  std::unordered_map<std::uint64_t, int> arrows_;
};

using Context = std::vector<int>;  // sorted, no duplicates

bool contains(const Context& ctx, int f) { return std::ranges::binary_search(ctx, f); }

void insert(Context& ctx, int f) {
  auto it = std::ranges::lower_bound(ctx, f);
  if (it == ctx.end() || *it != f) ctx.insert(it, f);
}

void erase(Context& ctx, int f) {
  auto it = std::ranges::lower_bound(ctx, f);
  if (it != ctx.end() && *it == f) ctx.erase(it);
}

class LjtProver {
 public:
  explicit LjtProver(FormulaStore& store) : s_(store) {}

  bool prove(Context ctx, int goal) {
    while (!s_.isAtom(goal)) {
      insert(ctx, s_.left(goal));
      goal = s_.right(goal);
    }
    saturate(ctx);
    if (contains(ctx, goal)) return true;

    auto key = std::make_pair(ctx, goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool proved = false;
    for (int f : ctx) {
      if (s_.isAtom(f) || s_.isAtom(s_.left(f))) continue;
      // (C -> D) -> B in the context.
      const int c = s_.left(s_.left(f));
      const int d = s_.right(s_.left(f));
      const int b = s_.right(f);
      Context rest = ctx;
      erase(rest, f);
      Context first = rest;
      insert(first, s_.arrow(d, b));
      if (!prove(std::move(first), s_.arrow(c, d))) continue;
      Context second = rest;
      insert(second, b);
      if (prove(std::move(second), goal)) {
        proved = true;
        break;
      }
    }
    memo_.emplace(std::move(key), proved);
    return proved;
  }

 private:
  // Invertible rule: p, p -> B  ==>  p, B.
  void saturate(Context& ctx) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int f : ctx) {
        if (s_.isAtom(f)) continue;
        const int a = s_.left(f);
        if (s_.isAtom(a) && contains(ctx, a)) {
          erase(ctx, f);
          insert(ctx, s_.right(f));
          changed = true;
          break;
        }
      }
    }
  }

  FormulaStore& s_;
  std::map<std::pair<Context, int>, bool> memo_;
};

class NaturalDeductionSearch {
 public:
  NaturalDeductionSearch(FormulaStore& store, std::size_t maxDepth) : s_(store), maxDepth_(maxDepth) {}

  bool prove(Context ctx, int goal, std::size_t depth) {
    while (!s_.isAtom(goal)) {
      insert(ctx, s_.left(goal));
      goal = s_.right(goal);
    }
    if (depth >= maxDepth_) return false;
    auto key = std::make_pair(ctx, goal);
    if (onBranch_.contains(key)) return false;
    onBranch_.insert(key);
    bool proved = false;
    // Eliminate a hypothesis H1 -> ... -> Hk -> goal.
    for (int h : ctx) {
      std::vector<int> premises;
      int head = h;
      while (!s_.isAtom(head)) {
        premises.push_back(s_.left(head));
        head = s_.right(head);
      }
      if (head != goal) continue;
      if (std::ranges::all_of(premises, [&](int p) { return prove(ctx, p, depth + 1); })) {
        proved = true;
        break;
      }
    }
    onBranch_.erase(key);
    return proved;
  }

 private:
  FormulaStore& s_;
  std::size_t maxDepth_;
  std::set<std::pair<Context, int>> onBranch_;
};

}  // namespace

bool proveIntuitionistic(TermView e) {
  FormulaStore store;
  const int goal = store.intern(e);
  return LjtProver(store).prove({}, goal);
}

bool proveNaturalDeduction(TermView e, std::size_t maxDepth) {
  FormulaStore store;
  const int goal = store.intern(e);
  return NaturalDeductionSearch(store, maxDepth).prove({}, goal, 0);
}

// ---------------------------------------------------------------------------
// Truth tables

std::uint64_t evaluateLanes(TermView e, std::span<const std::uint64_t> words) {
  std::vector<std::uint64_t> stack;
  stack.reserve(e.size() / 2 + 1);
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] != kArrow) {
      stack.push_back(words[static_cast<std::size_t>(e[i])]);
      continue;
    }
    std::uint64_t premise = stack.back();
    stack.pop_back();
    stack.back() = stack.back() | ~premise;
  }
  return stack.back();
}

bool truthTableTautology(TermView e) {
  std::unordered_map<Var, Var> dense;
  std::vector<Var> tokens(e.begin(), e.end());
  for (Var& v : tokens)
    if (v != kArrow) v = dense.try_emplace(v, static_cast<Var>(dense.size())).first->second;
  const std::size_t m = dense.size();
  if (m > kMaxTruthTableVars)
    throw std::invalid_argument("truth table refused: " + std::to_string(m) + " variables (max " +
                                std::to_string(kMaxTruthTableVars) + ")");

  // Lane j of the low six variables follows bit v of j.
  static constexpr std::uint64_t kLanePattern[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::uint64_t lanes = m >= 6 ? ~0ULL : (1ULL << (1ULL << m)) - 1;
  const std::uint64_t blocks = m > 6 ? 1ULL << (m - 6) : 1;

  std::vector<std::uint64_t> words(m);
  for (std::size_t v = 0; v < std::min<std::size_t>(m, 6); ++v) words[v] = kLanePattern[v];
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t v = 6; v < m; ++v) words[v] = (block >> (v - 6)) & 1 ? ~0ULL : 0ULL;
    if ((evaluateLanes(tokens, words) & lanes) != lanes) return false;
  }
  return true;
}

double chiSquare(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("chiSquare: observed and expected lengths differ");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0) throw std::invalid_argument("chiSquare: expected counts must be positive");
    const double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

}  // namespace canex
