#include "canex/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace canex {

void Valuation::set(Var v, bool value) {
  if (v < 0) throw std::invalid_argument("valuation: negative variable index");
  if (static_cast<std::size_t>(v) >= values_.size()) values_.resize(static_cast<std::size_t>(v) + 1, -1);
  values_[static_cast<std::size_t>(v)] = value ? 1 : 0;
}

void Valuation::unset(Var v) {
  if (v >= 0 && static_cast<std::size_t>(v) < values_.size()) values_[static_cast<std::size_t>(v)] = -1;
  while (!values_.empty() && values_.back() < 0) values_.pop_back();
}

std::optional<bool> Valuation::get(Var v) const noexcept {
  if (v < 0 || static_cast<std::size_t>(v) >= values_.size() || values_[static_cast<std::size_t>(v)] < 0)
    return std::nullopt;
  return values_[static_cast<std::size_t>(v)] == 1;
}

bool Valuation::covers(TermView e) const noexcept {
  return std::ranges::all_of(e, [&](Var v) { return v == kArrow || get(v).has_value(); });
}

nlohmann::json Valuation::toJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= 0) j["a" + std::to_string(i)] = values_[i] == 1;
  return j;
}

bool evaluate(TermView e, const Valuation& rho) {
  std::vector<bool> stack;
  stack.reserve(e.size() / 2 + 1);
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] != kArrow) {
      auto value = rho.get(e[i]);
      if (!value) throw std::invalid_argument("evaluate: a" + std::to_string(e[i]) + " is unassigned");
      stack.push_back(*value);
      continue;
    }
    bool premise = stack.back();
    stack.pop_back();
    bool conclusion = stack.back();
    stack.back() = conclusion || !premise;
  }
  return stack.back();
}

Valuation antilogyValuation(TermView e) {
  Valuation rho;
  const Var goal = goalOf(e);
  for (Var v : e)
    if (v != kArrow) rho.set(v, v != goal);
  return rho;
}

bool isSimpleAntilogy(TermView e) {
  const Spine s = spine(e);
  for (TermView p : s.premises)
    if (goalOf(p) == s.goal && !isSimple(p)) return false;
  return true;
}

bool isSimpleNonTautologyGKZ(TermView e) noexcept {
  const Var goal = goalOf(e);
  while (!isVariable(e)) {
    std::size_t end = subtermEnd(e, 1);
    if (e[end - 1] == goal) return false;
    e = e.subspan(end);
  }
  return true;
}

Term collapseHighVariables(TermView e, Var bound) {
  if (bound < 0) throw std::invalid_argument("collapseHighVariables: bound must be non-negative");
  std::vector<Var> tokens(e.begin(), e.end());
  for (Var& v : tokens)
    if (v > bound) v = bound;
  return makeTermUnchecked(std::move(tokens));
}

namespace {

enum Tri : std::uint8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

class Falsifier {
 public:
  explicit Falsifier(TermView e) : tokens_(e.begin(), e.end()), values_(e.size()) {
    std::unordered_map<Var, Var> dense;
    for (Var& v : tokens_) {
      if (v == kArrow) continue;
      auto [it, fresh] = dense.try_emplace(v, static_cast<Var>(original_.size()));
      if (fresh) original_.push_back(v);
      v = it->second;
    }
    assignment_.assign(original_.size(), kUnknown);
  }

  std::optional<Valuation> run() {
    if (!search()) return std::nullopt;
    Valuation rho;
    for (std::size_t i = 0; i < original_.size(); ++i)
      rho.set(original_[i], assignment_[i] != kFalse);
    return rho;
  }

 private:
  // Fills values_ with the three-valued value of the subterm at each position.
  Tri evaluate3() {
    stack_.clear();
    for (std::size_t i = tokens_.size(); i-- > 0;) {
      if (tokens_[i] != kArrow) {
        values_[i] = assignment_[static_cast<std::size_t>(tokens_[i])];
      } else {
        Tri premise = stack_.back();
        stack_.pop_back();
        Tri conclusion = stack_.back();
        stack_.pop_back();
        if (premise == kFalse || conclusion == kTrue) values_[i] = kTrue;
        else if (premise == kTrue && conclusion == kFalse) values_[i] = kFalse;
        else values_[i] = kUnknown;
      }
      stack_.push_back(values_[i]);
    }
    return values_[0];
  }

  // Follows undetermined subterms toward a variable whose value would move
  // the root toward false.
  std::pair<Var, bool> pick() const {
    std::size_t pos = 0;
    bool want = false;
    while (tokens_[pos] == kArrow) {
      std::size_t conclusionPos = subtermEnd(tokens_, pos + 1);
      if (values_[conclusionPos] == kUnknown) {
        pos = conclusionPos;
      } else {
        pos = pos + 1;
        want = !want;
      }
    }
    return {tokens_[pos], want};
  }

  bool search() {
    Tri root = evaluate3();
    if (root == kTrue) return false;
    if (root == kFalse) return true;
    auto [var, want] = pick();
    auto& slot = assignment_[static_cast<std::size_t>(var)];
    slot = want ? kTrue : kFalse;
    if (search()) return true;
    slot = want ? kFalse : kTrue;
    if (search()) return true;
    slot = kUnknown;
    return false;
  }

  std::vector<Var> tokens_;
  std::vector<Var> original_;
  std::vector<Tri> assignment_;
  std::vector<Tri> values_;
  std::vector<Tri> stack_;
};

}  // namespace

std::optional<Valuation> falsifySearch(TermView e) { return Falsifier(e).run(); }

const char* toString(Verdict v) noexcept {
  switch (v) {
    case Verdict::Tautology: return "tautology";
    case Verdict::NotTautology: return "not-tautology";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char* toString(Certificate c) noexcept {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::Antilogy: return "antilogy";
    case Certificate::Witness: return "witness";
  }
  return "none";
}

namespace {

// Extends a valuation of a cleaned (and possibly collapsed) expression to
// every variable of the original.
Valuation liftWitness(TermView original, const Valuation& rho, std::optional<Var> bound) {
  Valuation out;
  for (Var v : original) {
    if (v == kArrow) continue;
    Var source = bound && v > *bound ? *bound : v;
    out.set(v, rho.get(source).value_or(true));
  }
  return out;
}

}  // namespace

TautologyStatus isTautology(TermView e, std::size_t maxVars, const IntuitOptions& options) {
  if (maxVars == 0) throw std::invalid_argument("isTautology: maxVars must be at least 1");
  TautologyStatus status;
  const Term cleaned = clean(e, options);

  if (isSimpleAntilogy(cleaned)) {
    status.verdict = Verdict::NotTautology;
    status.certificate = Certificate::Antilogy;
    status.witness = liftWitness(e, antilogyValuation(cleaned), std::nullopt);
    return status;
  }

  status.searched = true;
  if (variableCount(cleaned) <= maxVars) {
    if (auto rho = falsifySearch(cleaned)) {
      status.verdict = Verdict::NotTautology;
      status.certificate = Certificate::Witness;
      status.witness = liftWitness(e, *rho, std::nullopt);
    } else {
      status.verdict = Verdict::Tautology;
    }
    return status;
  }

  status.collapsed = true;
  const Var bound = static_cast<Var>(maxVars - 1);
  const Term collapsed = collapseHighVariables(cleaned, bound);
  if (auto rho = falsifySearch(collapsed)) {
    status.verdict = Verdict::NotTautology;
    status.certificate = Certificate::Witness;
    status.witness = liftWitness(e, *rho, bound);
  } else {
    status.verdict = Verdict::Unknown;
    status.reason = "more than " + std::to_string(maxVars) +
                    " variables and the index-collapsed expression is a tautology";
  }
  return status;
}

}  // namespace canex
