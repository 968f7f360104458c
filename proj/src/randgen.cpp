#include "canex/randgen.hpp"

#include <stdexcept>

namespace canex {

void remyInsert(std::span<std::uint32_t> v, std::size_t leaves, std::uint64_t x) {
  const auto node = static_cast<std::uint32_t>(2 * leaves - 1);
  const auto leaf = static_cast<std::uint32_t>(2 * leaves);
  const std::size_t k = x / 2;
  const std::uint32_t moved = v[k];
  v[k] = node;
  if (x % 2 == 0) {
    v[node] = moved;
    v[leaf] = leaf;
  } else {
    v[node] = leaf;
    v[leaf] = moved;
  }
}

RemyVector remyStep(const RemyVector& v, std::uint64_t x) {
  if (v.empty() || v.size() % 2 == 0) throw std::invalid_argument("remyStep: vector length must be odd");
  const std::size_t leaves = (v.size() + 1) / 2;
  if (x > 4 * leaves - 3) throw std::invalid_argument("remyStep: draw out of range [0, 4L-3]");
  RemyVector out(v);
  out.resize(v.size() + 2);
  remyInsert(out, leaves, x);
  return out;
}

RemyVector randomRemyVector(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("randomRemyVector: size must be at least 1");
  RemyVector v(2 * n - 1, 0);
  for (std::size_t leaves = 1; leaves < n; ++leaves)
    remyInsert(v, leaves, rng.uniformBelow(4 * leaves - 2));
  return v;
}

TreeShape randomTree(Rng& rng, std::size_t n) {
  RemyVector v = randomRemyVector(rng, n);
  return decodeRemyVector(v, n);
}

ClassDescription randomPartition(Rng& rng, const StamTable& table) {
  ClassDescription c;
  c.classCount = static_cast<Var>(table.draw(rng.uniformReal()));
  c.labels.resize(table.n);
  for (auto& label : c.labels)
    label = static_cast<Var>(rng.uniformBelow(static_cast<std::uint64_t>(c.classCount)));
  return c;
}

GrowthString toGrowthString(const ClassDescription& c) {
  std::vector<Var> rename(static_cast<std::size_t>(c.classCount), -1);
  std::vector<Var> out(c.labels.size());
  Var next = 0;
  for (std::size_t i = c.labels.size(); i-- > 0;) {
    Var& name = rename.at(static_cast<std::size_t>(c.labels[i]));
    if (name < 0) name = next++;
    out[i] = name;
  }
  return GrowthString(std::move(out));
}

CanonicalExpression randomCanonical(Rng& rng, std::size_t n, const StamTable& table) {
  if (table.n != n) throw std::invalid_argument("randomCanonical: table built for another size");
  TreeShape shape = randomTree(rng, n);
  GrowthString vars = toGrowthString(randomPartition(rng, table));
  return CanonicalExpression(std::move(shape), std::move(vars));
}

}  // namespace canex
