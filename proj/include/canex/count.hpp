#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace canex {

/// Exact non-negative integer.
using BigCount = boost::multiprecision::cpp_int;

/// Catalan number C_n (binary trees with n internal nodes).
BigCount catalan(std::size_t n);
/// Bell number via the Bell triangle; memoized.
BigCount bell(std::size_t n);
/// K_n = C_{n-1} * Bell_n, the number of canonical expressions with n leaves.
BigCount countCanonical(std::size_t n);

/// Natural logarithm of a positive big integer, to double precision.
double logBig(const BigCount& x);

/// Positive root of r * e^r = n + 1 by Newton iteration from ln(n + 1).
double lambertRoot(std::size_t n);

/// log10 of the saddle-point estimate of K_n (n >= 2):
///   n! 4^(n-1) e^(e^r - 1) / (r^n pi sqrt(2 (n-1)^3 r (r+1) e^r)),
/// with r = lambertRoot(n).
double asymptoticCanonical(std::size_t n);

/// Distribution of the number of blocks M used by Stam's partition sampler:
///   P(M = m) = m^n / (e m! Bell_n),  m >= 1.
/// probs[0] and cumulative[0] are 0 so that index m is the class count.
struct StamTable {
  std::size_t n = 0;
  std::vector<double> probs;
  std::vector<double> cumulative;
  std::size_t mMax = 0;

  /// Smallest m with cumulative[m] > u, clamped to mMax.
  std::size_t draw(double u) const noexcept;
};

/// Cumulative mass retained before truncation.
inline constexpr double kStamTruncation = 1e-12;

StamTable stamTable(std::size_t n);
/// Thread-safe memoized table, built once per n.
std::shared_ptr<const StamTable> sharedStamTable(std::size_t n);

}  // namespace canex
