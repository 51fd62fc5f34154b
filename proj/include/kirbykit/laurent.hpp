#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirbykit/intalg.hpp"

namespace kirbykit {

/// Integer Laurent polynomial in one variable t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers convert implicitly
  LaurentPoly(const Integer& constant);  // NOLINT

  /// c * t^e
  static LaurentPoly monomial(const Integer& c, long e);
  static LaurentPoly t() { return monomial(1, 1); }
  /// Coefficients for t^lowest, t^(lowest+1), ...
  static LaurentPoly from_coefficients(long lowest, const std::vector<long>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(long e) const;
  const std::map<long, Integer>& terms() const { return terms_; }
  long min_degree() const;
  long max_degree() const;

  Integer evaluate(const Integer& at) const;  // requires at != 0 when negative exponents exist
  Integer at_one() const;

  /// p(t) -> p(1/t)
  LaurentPoly inverted() const;
  /// p(t) -> t^k p(t)
  LaurentPoly shifted(long k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Lowest exponent first: "2*t^-1 - 5 + 2*t".
  std::string to_string() const;

 private:
  void add_term(long e, const Integer& c);
  std::map<long, Integer> terms_;
};

/// Multiplies p by ±t^k so that p(t) = p(1/t), choosing the sign that makes the top
/// coefficient positive (so the twist knots read n*t^-1 - (2n+1) + n*t). Returns
/// nullopt when no unit multiple of p is symmetric.
std::optional<LaurentPoly> try_normalize_symmetric(const LaurentPoly& p);

/// As try_normalize_symmetric, but throws PreconditionError when impossible.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

/// Exact polynomial in t (nonnegative exponents) of degree < values.size() through
/// the points (x, values[x]), via Newton interpolation over Q.
/// Throws when the interpolant is not integral.
LaurentPoly interpolate_integer_polynomial(const std::vector<Integer>& values);

}  // namespace kirbykit
