#include "canex/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace canex {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------------------
// TreeShape

namespace {

// Length of the well-formed prefix tree starting at `pos`, or 0 if the
// sequence ends first.
template <class Seq, class IsNode>
std::size_t treeExtent(const Seq& seq, std::size_t pos, IsNode isNode) {
  std::size_t pending = 1;
  std::size_t i = pos;
  while (pending > 0) {
    if (i >= seq.size()) return 0;
    if (isNode(seq[i])) ++pending;
    else --pending;
    ++i;
  }
  return i - pos;
}

}  // namespace

TreeShape TreeShape::node(const TreeShape& left, const TreeShape& right) {
  std::vector<std::uint8_t> nodes;
  nodes.reserve(1 + left.nodes_.size() + right.nodes_.size());
  nodes.push_back(1);
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return TreeShape(std::move(nodes));
}

TreeShape TreeShape::fromPreorder(std::vector<std::uint8_t> preorder) {
  auto len = treeExtent(preorder, 0, [](std::uint8_t b) { return b != 0; });
  if (len == 0 || len != preorder.size())
    throw StructureError("preorder sequence does not encode a single tree");
  for (auto& b : preorder) b = b ? 1 : 0;
  return TreeShape(std::move(preorder));
}

TreeShape TreeShape::left() const {
  if (isLeaf()) throw std::logic_error("TreeShape::left on a leaf");
  auto len = treeExtent(nodes_, 1, [](std::uint8_t b) { return b != 0; });
  return TreeShape(std::vector<std::uint8_t>(nodes_.begin() + 1, nodes_.begin() + 1 + len));
}

TreeShape TreeShape::right() const {
  if (isLeaf()) throw std::logic_error("TreeShape::right on a leaf");
  auto len = treeExtent(nodes_, 1, [](std::uint8_t b) { return b != 0; });
  return TreeShape(std::vector<std::uint8_t>(nodes_.begin() + 1 + len, nodes_.end()));
}

std::string TreeShape::encode() const {
  // Preorder walk; each internal node closes after its second child.
  std::string out;
  std::vector<int> remaining;
  for (auto b : nodes_) {
    if (b) {
      out += '(';
      remaining.push_back(2);
      continue;
    }
    out += 'L';
    while (!remaining.empty() && --remaining.back() == 0) {
      remaining.pop_back();
      out += ')';
    }
  }
  return out;
}

TreeShape TreeShape::decode(std::string_view text) {
  std::vector<std::uint8_t> nodes;
  std::vector<int> children;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      nodes.push_back(1);
      children.push_back(0);
    } else if (c == 'L') {
      nodes.push_back(0);
      if (!children.empty()) ++children.back();
    } else if (c == ')') {
      if (children.empty() || children.back() != 2)
        throw StructureError("shape: node must have exactly two children near position " +
                             std::to_string(i));
      children.pop_back();
      if (!children.empty()) ++children.back();
    } else {
      throw StructureError("shape: unexpected character at position " + std::to_string(i));
    }
    if (!children.empty() && children.back() > 2)
      throw StructureError("shape: node with more than two children at position " +
                           std::to_string(i));
  }
  if (!children.empty()) throw StructureError("shape: unbalanced parentheses");
  return fromPreorder(std::move(nodes));
}

// ---------------------------------------------------------------------------
// GrowthString

bool isValidGrowthString(std::span<const Var> classes) noexcept {
  if (classes.empty()) return false;
  Var maxRight = -1;
  for (std::size_t i = classes.size(); i-- > 0;) {
    Var c = classes[i];
    if (c < 0 || c > maxRight + 1) return false;
    maxRight = std::max(maxRight, c);
  }
  return true;
}

GrowthString::GrowthString(std::vector<Var> classes) : classes_(std::move(classes)) {
  if (!isValidGrowthString(classes_))
    throw std::invalid_argument("not a right-to-left restricted growth string");
}

Var GrowthString::classCount() const noexcept {
  return classes_.empty() ? 0 : *std::max_element(classes_.begin(), classes_.end()) + 1;
}

// ---------------------------------------------------------------------------
// Term

std::size_t subtermEnd(TermView t, std::size_t pos) noexcept {
  std::size_t pending = 1;
  while (pending > 0) {
    if (t[pos] == kArrow) ++pending;
    else --pending;
    ++pos;
  }
  return pos;
}

Term::Term(std::vector<Var> tokens) : tokens_(std::move(tokens)) {
  for (Var v : tokens_)
    if (v < kArrow) throw StructureError("term: invalid token");
  auto len = treeExtent(tokens_, 0, [](Var v) { return v == kArrow; });
  if (len == 0 || len != tokens_.size())
    throw StructureError("term: token stream does not encode a single formula");
}

Term makeTermUnchecked(std::vector<Var> tokens) { return Term(std::move(tokens), Term::Unchecked{}); }

Term Term::variable(Var v) {
  if (v < 0) throw std::invalid_argument("variable index must be non-negative");
  return Term(std::vector<Var>{v}, Unchecked{});
}

Term Term::implication(TermView premise, TermView conclusion) {
  std::vector<Var> tokens;
  tokens.reserve(1 + premise.size() + conclusion.size());
  tokens.push_back(kArrow);
  tokens.insert(tokens.end(), premise.begin(), premise.end());
  tokens.insert(tokens.end(), conclusion.begin(), conclusion.end());
  return Term(std::move(tokens), Unchecked{});
}

std::size_t leafCount(TermView t) noexcept { return (t.size() + 1) / 2; }

std::size_t variableCount(TermView t) {
  std::unordered_set<Var> seen;
  for (Var v : t)
    if (v != kArrow) seen.insert(v);
  return seen.size();
}

Var maxVariable(TermView t) noexcept {
  Var m = 0;
  for (Var v : t) m = std::max(m, v);
  return m;
}

std::vector<Var> leaves(TermView t) {
  std::vector<Var> out;
  out.reserve(leafCount(t));
  for (Var v : t)
    if (v != kArrow) out.push_back(v);
  return out;
}

Spine spine(TermView t) {
  Spine s;
  while (!isVariable(t)) {
    std::size_t end = subtermEnd(t, 1);
    s.premises.push_back(t.subspan(1, end - 1));
    t = t.subspan(end);
  }
  s.goal = t[0];
  return s;
}

// ---------------------------------------------------------------------------
// CanonicalExpression

CanonicalExpression::CanonicalExpression(TreeShape s, GrowthString v)
    : shape(std::move(s)), vars(std::move(v)) {
  if (shape.leafCount() != vars.size())
    throw std::invalid_argument("growth string length differs from leaf count");
}

Term CanonicalExpression::toTerm() const {
  std::vector<Var> tokens;
  auto pre = shape.preorder();
  tokens.reserve(pre.size());
  std::size_t leaf = 0;
  for (auto b : pre) tokens.push_back(b ? kArrow : vars[leaf++]);
  return makeTermUnchecked(std::move(tokens));
}

CanonicalExpression CanonicalExpression::fromTerm(TermView t) {
  std::vector<std::uint8_t> pre;
  std::vector<Var> vars;
  pre.reserve(t.size());
  for (Var v : t) {
    pre.push_back(v == kArrow ? 1 : 0);
    if (v != kArrow) vars.push_back(v);
  }
  if (!isValidGrowthString(vars))
    throw CanonicalityError("variables are not numbered canonically (right to left from a0)");
  return CanonicalExpression(TreeShape::fromPreorder(std::move(pre)), GrowthString(std::move(vars)));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void renderInto(TermView t, std::string& out) {
  while (!isVariable(t)) {
    TermView premise = premiseOf(t);
    if (isVariable(premise)) {
      renderInto(premise, out);
    } else {
      out += '(';
      renderInto(premise, out);
      out += ')';
    }
    out += "->";
    t = t.subspan(1 + premise.size());
  }
  out += 'a';
  out += std::to_string(t[0]);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term run() {
    std::vector<Var> tokens;
    parseExpr(tokens, 0);
    skipSpace();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return makeTermUnchecked(std::move(tokens));
  }

 private:
  static constexpr int kMaxDepth = 10000;

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // expr := term | term "->" expr, iterated along the right spine.
  void parseExpr(std::vector<Var>& out, int depth) {
    if (depth > kMaxDepth) throw ParseError("nesting too deep", pos_);
    for (;;) {
      std::size_t mark = out.size();
      parseAtom(out, depth);
      skipSpace();
      if (text_.substr(pos_, 2) != "->") return;
      pos_ += 2;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(mark), kArrow);
    }
  }

  void parseAtom(std::vector<Var>& out, int depth) {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      parseExpr(out, depth + 1);
      skipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return;
    }
    if (c != 'a') throw ParseError(std::string("expected 'a' or '(' but found '") + c + "'", pos_);
    std::size_t start = ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected variable index", pos_);
    Var v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) throw ParseError("variable index out of range", start);
    out.push_back(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(TermView t) {
  std::string out;
  out.reserve(t.size() * 3);
  renderInto(t, out);
  return out;
}

std::string render(const CanonicalExpression& e) { return render(e.toTerm().view()); }

Term parseTerm(std::string_view text) { return Parser(text).run(); }

CanonicalExpression parse(std::string_view text) {
  return CanonicalExpression::fromTerm(parseTerm(text).view());
}

CanonicalExpression parseCanonicalizing(std::string_view text) {
  Term t = parseTerm(text);
  auto vars = canonicalize(leaves(t.view()));
  std::vector<Var> tokens(t.view().begin(), t.view().end());
  std::size_t leaf = 0;
  for (Var& v : tokens)
    if (v != kArrow) v = vars[leaf++];
  return CanonicalExpression::fromTerm(tokens);
}

nlohmann::json toJson(const CanonicalExpression& e) {
  auto c = e.vars.classes();
  return nlohmann::json{{"rgs", std::vector<Var>(c.begin(), c.end())}, {"shape", e.shape.encode()}};
}

CanonicalExpression fromJson(const nlohmann::json& j) {
  auto shape = TreeShape::decode(j.at("shape").get<std::string>());
  auto rgs = j.at("rgs").get<std::vector<Var>>();
  if (!isValidGrowthString(rgs)) throw CanonicalityError("rgs is not a restricted growth string");
  return CanonicalExpression(std::move(shape), GrowthString(std::move(rgs)));
}

// ---------------------------------------------------------------------------
// Remy vectors

namespace {

template <class OnLeaf>
TreeShape walkRemy(std::span<const std::uint32_t> v, std::size_t n, OnLeaf onLeaf) {
  if (n == 0) throw StructureError("remy vector: leaf count must be positive");
  const std::size_t labels = 2 * n - 1;
  if (v.size() < labels) throw StructureError("remy vector: too short for the leaf count");
  std::vector<std::uint8_t> seen(labels, 0);
  std::vector<std::uint8_t> pre;
  pre.reserve(labels);
  std::vector<std::uint32_t> stack{v[0]};
  while (!stack.empty()) {
    std::uint32_t label = stack.back();
    stack.pop_back();
    if (label >= labels) throw StructureError("remy vector: label out of range");
    if (seen[label]) throw StructureError("remy vector: label reached twice");
    seen[label] = 1;
    if (label % 2 == 1) {
      pre.push_back(1);
      stack.push_back(v[label + 1]);
      stack.push_back(v[label]);
    } else {
      pre.push_back(0);
      onLeaf(label);
    }
  }
  if (pre.size() != labels) throw StructureError("remy vector: labels not all reachable");
  return TreeShape::fromPreorder(std::move(pre));
}

}  // namespace

TreeShape decodeRemyVector(std::span<const std::uint32_t> v, std::size_t n) {
  return walkRemy(v, n, [](std::uint32_t) {});
}

std::vector<std::uint32_t> remyLeafLabels(std::span<const std::uint32_t> v, std::size_t n) {
  std::vector<std::uint32_t> out;
  walkRemy(v, n, [&](std::uint32_t l) { out.push_back(l); });
  return out;
}

}  // namespace canex
