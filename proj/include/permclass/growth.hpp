#pragma once

#include "permclass/enumeration.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace permclass {

/// Integer polynomial stored highest degree first, leading coefficient nonzero.
class IntPolynomial {
public:
  /// Throws Error(Unsupported) on an empty list or a zero leading coefficient.
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

  /// Exact value at a rational point.
  mpq_class operator()(const mpq_class& x) const;
  /// Exact sign (-1, 0, 1) at a rational point.
  int sign_at(const mpq_class& x) const;

  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

private:
  std::vector<mpz_class> coeffs_;
};

/// x^d - c_1 x^{d-1} - ... - c_d. Throws Error(Unsupported) for non-integer coefficients.
IntPolynomial char_poly(const LinearRecurrence& r);

/// x^i - x^{i-1} - ... - x - 1.
IntPolynomial alpha_poly(std::size_t i);

/// A real root enclosed by a certified bracket: the polynomial has opposite
/// exact signs at lo and hi, and hi - lo <= 2 * error_bound.
struct RootEstimate {
  double value;
  double error_bound;
  mpq_class lo;
  mpq_class hi;
};

/// Number of distinct real roots in (lo, hi], by Sturm's theorem.
std::size_t count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

/// Largest real root in (1, 1 + max|c_i / c_0|]. The bracket is first narrowed
/// until it isolates that root, then bisected with exact signs down to tol.
/// Throws Error(NoRootAboveOne) if no root lies above 1, Error(Undefined) if tol <= 0.
RootEstimate dominant_root(const IntPolynomial& p, double tol = 1e-9);

/// Largest positive root of x^i - x^{i-1} - ... - 1. Throws Error(InvalidIndex) for i < 2.
RootEstimate alpha(std::size_t i, double tol = 1e-9);

/// Ratio of the last two terms of a sequence.
struct GrowthRatio {
  double ratio;
  /// 1-based index of the last term used.
  std::size_t index;
};

/// Throws Error(Undefined) when fewer than two terms exist or either of the last two is not positive.
GrowthRatio empirical_growth(const CountSeq& seq);

/// Fixed five-decimal rendering used in reports.
std::string format_root(double value);

} // namespace permclass
