#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "canex/core.hpp"
#include "canex/intuition.hpp"

namespace canex {

/// Assignment of booleans to variable indices; entries may be unassigned.
class Valuation {
 public:
  Valuation() = default;

  void set(Var v, bool value);
  void unset(Var v);
  std::optional<bool> get(Var v) const noexcept;
  bool covers(TermView e) const noexcept;

  /// {"a0": false, "a1": true, ...} over the assigned variables.
  nlohmann::json toJson() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<std::int8_t> values_;  // -1 = unassigned
};

/// val(x) = rho(x); val(A -> B) = val(B) or not val(A).
/// Throws std::invalid_argument if rho misses a variable of e.
bool evaluate(TermView e, const Valuation& rho);

/// rho(goal) = false, every other variable of e true.
Valuation antilogyValuation(TermView e);

/// Every premise either has a goal other than the goal of e, or has that
/// goal and is simple. Falsified by antilogyValuation.
bool isSimpleAntilogy(TermView e);

/// Every premise has a goal other than the goal of e.
bool isSimpleNonTautologyGKZ(TermView e) noexcept;

/// Renames every index above `bound` to `bound`.
Term collapseHighVariables(TermView e, Var bound);

/// Falsifying valuation over the variables of e, if one exists. Backtracking
/// with three-valued evaluation under partial assignments.
std::optional<Valuation> falsifySearch(TermView e);

enum class Verdict { Tautology, NotTautology, Unknown };
enum class Certificate { None, Antilogy, Witness };

const char* toString(Verdict v) noexcept;
const char* toString(Certificate c) noexcept;

struct TautologyStatus {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate = Certificate::None;
  /// Falsifying valuation over the variables of the input (NotTautology).
  std::optional<Valuation> witness;
  std::string reason;
  /// The falsification search ran (the antilogy filter did not decide).
  bool searched = false;
  /// The search ran on the index-collapsed expression.
  bool collapsed = false;
};

inline constexpr std::size_t kDefaultMaxVars = 32;

/// clean -> simple-antilogy filter -> falsification search, on the
/// index-collapsed expression when more than maxVars variables remain.
TautologyStatus isTautology(TermView e, std::size_t maxVars = kDefaultMaxVars,
                            const IntuitOptions& options = {});

}  // namespace canex
