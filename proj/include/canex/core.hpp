#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace canex {

/// Variable index; `a3` in the text format is Var{3}.
using Var = std::int32_t;

/// Token marking an implication node in a preorder token stream.
inline constexpr Var kArrow = -1;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed text whose variable numbering is not the canonical one.
class CanonicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Remy vector, shape encoding or token stream.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary tree with unlabeled leaves, stored as a preorder bit sequence
/// (1 = internal node, 0 = leaf).
class TreeShape {
 public:
  TreeShape() : nodes_{0} {}

  static TreeShape leaf() { return TreeShape{}; }
  static TreeShape node(const TreeShape& left, const TreeShape& right);
  /// Throws StructureError unless `preorder` encodes exactly one tree.
  static TreeShape fromPreorder(std::vector<std::uint8_t> preorder);

  std::size_t leafCount() const noexcept { return (nodes_.size() + 1) / 2; }
  std::size_t internalCount() const noexcept { return nodes_.size() / 2; }
  bool isLeaf() const noexcept { return nodes_.size() == 1; }
  TreeShape left() const;
  TreeShape right() const;

  std::span<const std::uint8_t> preorder() const noexcept { return nodes_; }

  /// "L" for a leaf, "(XY)" for a node.
  std::string encode() const;
  static TreeShape decode(std::string_view text);

  friend bool operator==(const TreeShape&, const TreeShape&) = default;
  friend auto operator<=>(const TreeShape&, const TreeShape&) = default;

 private:
  explicit TreeShape(std::vector<std::uint8_t> nodes) : nodes_(std::move(nodes)) {}
  std::vector<std::uint8_t> nodes_;
};

/// Right-to-left restricted growth string: the rightmost entry is 0 and every
/// entry is at most one more than the maximum of the entries to its right.
class GrowthString {
 public:
  GrowthString() = default;
  /// Throws std::invalid_argument unless `classes` is a valid growth string.
  explicit GrowthString(std::vector<Var> classes);

  std::span<const Var> classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  Var operator[](std::size_t i) const { return classes_[i]; }
  /// Number of distinct classes (max entry + 1).
  Var classCount() const noexcept;

  friend bool operator==(const GrowthString&, const GrowthString&) = default;
  friend auto operator<=>(const GrowthString&, const GrowthString&) = default;

 private:
  std::vector<Var> classes_;
};

bool isValidGrowthString(std::span<const Var> classes) noexcept;

/// Right-to-left first-occurrence numbering of arbitrary tokens.
template <class Token, class Hash = std::hash<Token>>
GrowthString canonicalize(std::span<const Token> tokens) {
  if (tokens.empty()) throw std::invalid_argument("canonicalize: empty token sequence");
  std::unordered_map<Token, Var, Hash> names;
  std::vector<Var> out(tokens.size());
  for (std::size_t i = tokens.size(); i-- > 0;) {
    auto [it, fresh] = names.try_emplace(tokens[i], static_cast<Var>(names.size()));
    out[i] = it->second;
  }
  return GrowthString(std::move(out));
}

template <class Token>
GrowthString canonicalize(const std::vector<Token>& tokens) {
  return canonicalize(std::span<const Token>(tokens));
}

/// Read-only view of an implicational formula in preorder: kArrow for an
/// implication node followed by its premise then its conclusion, a
/// non-negative Var for a leaf.
using TermView = std::span<const Var>;

/// Implicational formula with arbitrary variable indices (cleaned or
/// collapsed expressions are generally not canonical).
class Term {
 public:
  Term() : tokens_{0} {}
  /// Throws StructureError unless `tokens` is a single well-formed formula.
  explicit Term(std::vector<Var> tokens);

  static Term variable(Var v);
  static Term implication(TermView premise, TermView conclusion);

  TermView view() const noexcept { return tokens_; }
  operator TermView() const noexcept { return tokens_; }
  std::size_t leafCount() const noexcept { return (tokens_.size() + 1) / 2; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  struct Unchecked {};
  Term(std::vector<Var> tokens, Unchecked) : tokens_(std::move(tokens)) {}
  std::vector<Var> tokens_;
  friend Term makeTermUnchecked(std::vector<Var> tokens);
};

/// Internal: wraps tokens already known to be well formed.
Term makeTermUnchecked(std::vector<Var> tokens);

/// One past the last token of the subterm starting at `pos`.
std::size_t subtermEnd(TermView t, std::size_t pos) noexcept;

inline bool isVariable(TermView t) noexcept { return t.size() == 1; }
inline TermView premiseOf(TermView t) noexcept { return t.subspan(1, subtermEnd(t, 1) - 1); }
inline TermView conclusionOf(TermView t) noexcept { return t.subspan(subtermEnd(t, 1)); }

/// Rightmost leaf.
inline Var goalOf(TermView t) noexcept { return t.back(); }

std::size_t leafCount(TermView t) noexcept;
/// Number of distinct variables.
std::size_t variableCount(TermView t);
Var maxVariable(TermView t) noexcept;
/// Leaf variables, left to right.
std::vector<Var> leaves(TermView t);

/// e = p1 -> p2 -> ... -> pk -> goal.
struct Spine {
  std::vector<TermView> premises;
  Var goal = 0;
};

Spine spine(TermView t);

/// Expression up to renaming of variables: a shape whose i-th leaf (left to
/// right) carries vars[i].
struct CanonicalExpression {
  TreeShape shape;
  GrowthString vars{std::vector<Var>{0}};

  /// Throws std::invalid_argument if leaf count and string length differ.
  CanonicalExpression(TreeShape s, GrowthString v);
  CanonicalExpression() = default;

  Term toTerm() const;
  /// Throws CanonicalityError when the numbering of `t` is not canonical.
  static CanonicalExpression fromTerm(TermView t);
  std::size_t size() const noexcept { return shape.leafCount(); }

  friend bool operator==(const CanonicalExpression&, const CanonicalExpression&) = default;
};

/// Minimal parentheses, right-associative "->", no whitespace.
std::string render(TermView t);
std::string render(const CanonicalExpression& e);

/// Parses any variable numbering. Whitespace is skipped.
Term parseTerm(std::string_view text);
/// Parses and requires canonical numbering.
CanonicalExpression parse(std::string_view text);
/// Parses and renumbers canonically.
CanonicalExpression parseCanonicalizing(std::string_view text);

nlohmann::json toJson(const CanonicalExpression& e);
CanonicalExpression fromJson(const nlohmann::json& j);

/// Remy vector: entry 0 is the root label; internal node k (odd) has children
/// entries[k] and entries[k + 1]; leaves carry even labels.
using RemyVector = std::vector<std::uint32_t>;

/// Throws StructureError on cycles, repeated or out-of-range labels.
TreeShape decodeRemyVector(std::span<const std::uint32_t> v, std::size_t n);
/// Leaf labels of the decoded tree in left-to-right order.
std::vector<std::uint32_t> remyLeafLabels(std::span<const std::uint32_t> v, std::size_t n);

}  // namespace canex
