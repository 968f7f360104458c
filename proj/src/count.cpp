#include "canex/count.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace canex {

BigCount catalan(std::size_t n) {
  // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
  BigCount c = 1;
  for (std::size_t k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= (k + 2);
  }
  return c;
}

BigCount bell(std::size_t n) {
  static std::mutex mutex;
  static std::vector<BigCount> numbers{1};
  static std::vector<BigCount> lastRow{1};

  std::lock_guard lock(mutex);
  while (numbers.size() <= n) {
    std::vector<BigCount> row;
    row.reserve(lastRow.size() + 1);
    row.push_back(lastRow.back());
    for (const auto& above : lastRow) row.push_back(row.back() + above);
    numbers.push_back(row.front());
    lastRow = std::move(row);
  }
  return numbers[n];
}

BigCount countCanonical(std::size_t n) {
  if (n == 0) throw std::invalid_argument("countCanonical: size must be at least 1");
  return catalan(n - 1) * bell(n);
}

double logBig(const BigCount& x) {
  if (x <= 0) throw std::domain_error("logBig: argument must be positive");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 64) return std::log(x.convert_to<double>());
  const std::size_t shift = msb - 63;
  BigCount top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double lambertRoot(std::size_t n) {
  const double target = static_cast<double>(n) + 1.0;
  double r = std::log(target);
  for (int iter = 0; iter < 200; ++iter) {
    const double er = std::exp(r);
    const double step = (r * er - target) / (er * (r + 1.0));
    r -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(r))) break;
  }
  return r;
}

double asymptoticCanonical(std::size_t n) {
  if (n < 2) throw std::invalid_argument("asymptoticCanonical: size must be at least 2");
  const double r = lambertRoot(n);
  const double nd = static_cast<double>(n);
  const double m1 = nd - 1.0;
  double ln = std::lgamma(nd + 1.0) + m1 * std::log(4.0) + std::expm1(r) - nd * std::log(r) -
              std::log(std::numbers::pi) -
              0.5 * (std::log(2.0) + 3.0 * std::log(m1) + std::log(r) + std::log(r + 1.0) + r);
  return ln / std::numbers::ln10;
}

std::size_t StamTable::draw(double u) const noexcept {
  auto first = cumulative.begin() + 1;
  auto last = cumulative.begin() + static_cast<std::ptrdiff_t>(mMax) + 1;
  auto it = std::upper_bound(first, last, u);
  if (it == last) return mMax;
  return static_cast<std::size_t>(it - cumulative.begin());
}

StamTable stamTable(std::size_t n) {
  if (n == 0) throw std::invalid_argument("stamTable: size must be at least 1");
  StamTable table;
  table.n = n;
  table.probs.push_back(0.0);
  table.cumulative.push_back(0.0);

  const double logBell = logBig(bell(n));
  BigCount factorial = 1;
  double total = 0.0;
  double previous = 0.0;
  for (std::size_t m = 1;; ++m) {
    factorial *= m;
    BigCount power = boost::multiprecision::pow(BigCount(m), static_cast<unsigned>(n));
    const double logp = logBig(power) - 1.0 - logBig(factorial) - logBell;
    const double p = std::exp(logp);
    total += p;
    table.probs.push_back(p);
    table.cumulative.push_back(total);
    // Past the mode the terms only shrink, so the tail bound is safe to test.
    if (total >= 1.0 - kStamTruncation && p <= previous) {
      table.mMax = m;
      break;
    }
    previous = p;
  }
  return table;
}

std::shared_ptr<const StamTable> sharedStamTable(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const StamTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const StamTable>(stamTable(n));
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(built)).first->second;
}

}  // namespace canex
