#pragma once

#include <cstddef>

#include "canex/core.hpp"

namespace canex {

struct IntuitOptions {
  /// Also accept premises A and A -> goal for non-variable A. Sound, but not
  /// part of the default cascade.
  bool generalizedMP = false;
};

/// Verdicts of the cheap cascade. simple/mp/easy describe the input
/// expression; minor and cheap describe its cleaned form.
struct IntuitVerdict {
  bool simple = false;
  bool mp = false;
  bool easy = false;
  bool minor = false;
  bool cheap = false;
  std::size_t cleanedSize = 0;
  Term cleaned;
};

/// Some top-level premise is the goal variable itself.
bool isSimple(TermView e) noexcept;

/// Some premise is a variable v and another premise is exactly v -> goal.
bool isMP(TermView e, const IntuitOptions& options = {});

bool isEasy(TermView e, const IntuitOptions& options = {});

/// Drops, innermost first, every premise that is easy once itself cleaned,
/// repeating the pass until nothing changes. Intuitionistically equivalent
/// to the input.
Term clean(TermView e, const IntuitOptions& options = {});

/// e = p1 -> ... -> pk -> g with some premise p_i equal to a later tail
/// p_m -> ... -> g (m > i), or to g itself.
bool isMinor(TermView e) noexcept;

/// Cleans, then checks easy-or-minor on the cleaned expression.
IntuitVerdict isCheap(TermView e, const IntuitOptions& options = {});

}  // namespace canex
