#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace knotlab {

/// Integer Laurent polynomial in one variable t.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has
/// no coefficients. Alexander polynomials are only defined up to +-t^k, so
/// comparisons between them go through canonical().
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly from_coefficients(int low_exponent, std::vector<std::int64_t> coefficients);
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return is_zero() ? 0 : high_degree() - low_degree(); }
  std::int64_t coefficient(int exponent) const noexcept;
  std::map<int, std::int64_t> terms() const;

  /// Minimal exponent 0 and positive leading coefficient.
  LaurentPoly canonical() const;
  bool is_canonical() const { return *this == canonical(); }
  bool is_palindromic() const;

  /// Value at t = 1 or t = -1 (the only units where a Laurent value is integral).
  std::int64_t value_at_unit(int t) const;

  /// Canonical text form: coefficients from degree 0 ascending, e.g. `1 -1 1`.
  std::string to_text() const;
  static LaurentPoly parse_text(std::string_view text);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace knotlab
