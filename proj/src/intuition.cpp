#include "canex/intuition.hpp"

#include <algorithm>

namespace canex {

namespace {

bool sameTerm(TermView a, TermView b) noexcept { return std::ranges::equal(a, b); }

void cleanInto(TermView e, const IntuitOptions& options, std::vector<Var>& out) {
  std::vector<Var> premise;
  std::vector<Var> kept;
  std::size_t keptCount = 0;
  while (!isVariable(e)) {
    TermView p = premiseOf(e);
    premise.clear();
    cleanInto(p, options, premise);
    if (!isEasy(premise, options)) {
      kept.insert(kept.end(), premise.begin(), premise.end());
      ++keptCount;
    }
    e = e.subspan(1 + p.size());
  }
  // Kept premises were appended in order; interleave the arrows.
  std::size_t pos = 0;
  for (std::size_t i = 0; i < keptCount; ++i) {
    out.push_back(kArrow);
    std::size_t end = pos + subtermEnd(TermView(kept).subspan(pos), 0);
    out.insert(out.end(), kept.begin() + static_cast<std::ptrdiff_t>(pos),
               kept.begin() + static_cast<std::ptrdiff_t>(end));
    pos = end;
  }
  out.push_back(e[0]);
}

}  // namespace

bool isSimple(TermView e) noexcept {
  const Var goal = goalOf(e);
  while (!isVariable(e)) {
    std::size_t end = subtermEnd(e, 1);
    if (end == 2 && e[1] == goal) return true;
    e = e.subspan(end);
  }
  return false;
}

bool isMP(TermView e, const IntuitOptions& options) {
  const Spine s = spine(e);
  for (TermView implication : s.premises) {
    if (isVariable(implication)) continue;
    TermView conclusion = conclusionOf(implication);
    if (!isVariable(conclusion) || conclusion[0] != s.goal) continue;
    TermView antecedent = premiseOf(implication);
    if (!options.generalizedMP && !isVariable(antecedent)) continue;
    for (TermView other : s.premises)
      if (sameTerm(other, antecedent)) return true;
  }
  return false;
}

bool isEasy(TermView e, const IntuitOptions& options) { return isSimple(e) || isMP(e, options); }

Term clean(TermView e, const IntuitOptions& options) {
  std::vector<Var> current(e.begin(), e.end());
  for (;;) {
    std::vector<Var> next;
    next.reserve(current.size());
    cleanInto(current, options, next);
    if (next.size() == current.size()) return makeTermUnchecked(std::move(next));
    current = std::move(next);
  }
}

bool isMinor(TermView e) noexcept {
  // tails[m] is p_m -> ... -> g; the last entry is g alone.
  std::vector<TermView> premises;
  std::vector<TermView> tails;
  TermView rest = e;
  while (!isVariable(rest)) {
    tails.push_back(rest);
    TermView p = premiseOf(rest);
    premises.push_back(p);
    rest = rest.subspan(1 + p.size());
  }
  tails.push_back(rest);
  for (std::size_t i = 0; i < premises.size(); ++i)
    for (std::size_t m = i + 1; m < tails.size(); ++m)
      if (sameTerm(premises[i], tails[m])) return true;
  return false;
}

IntuitVerdict isCheap(TermView e, const IntuitOptions& options) {
  IntuitVerdict v;
  v.simple = isSimple(e);
  v.mp = isMP(e, options);
  v.easy = v.simple || v.mp;
  v.cleaned = clean(e, options);
  v.cleanedSize = v.cleaned.leafCount();
  v.minor = isMinor(v.cleaned);
  v.cheap = isEasy(v.cleaned, options) || v.minor;
  return v;
}

}  // namespace canex
