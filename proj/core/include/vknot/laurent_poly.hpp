#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace vknot {

/// Integer Laurent polynomial in t, t^-1. No zero coefficients are stored.
class LaurentPoly {
 public:
  using Coefficient = std::int64_t;

  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, Coefficient> coeffs);

  static LaurentPoly monomial(int exponent, Coefficient c = 1);

  const std::map<int, Coefficient>& coefficients() const noexcept { return coeffs_; }
  Coefficient coefficient(int exponent) const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add_term(int exponent, Coefficient c);

  /// Value at t = 1, i.e. the coefficient sum.
  Coefficient at_one() const noexcept;
  /// Sum of absolute values of the coefficients.
  Coefficient l1_norm() const noexcept;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "t^4 - 2t^2 + 1"; exponents decreasing; zero prints as "0".
  std::string to_string() const;

 private:
  std::map<int, Coefficient> coeffs_;
};

}  // namespace vknot
