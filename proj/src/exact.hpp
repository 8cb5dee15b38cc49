#pragma once

// Exact linear algebra used by the invariant computations.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace knotlab::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial in t with 128-bit coefficients; index = exponent.
/// Arithmetic throws InconsistencyError on overflow.
struct IntPoly {
  std::vector<__int128> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<__int128> coeffs);
  bool is_zero() const { return c.empty(); }
  void trim();
};

IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
/// Exact division; throws InconsistencyError if b does not divide a.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

/// Fraction-free (Bareiss) determinant over Z[t]. The matrix is consumed.
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m);

/// Exact integer determinant.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m);

/// Signature of a symmetric integer matrix via exact congruence diagonalisation.
int symmetric_signature(const std::vector<std::vector<std::int64_t>>& m);

/// Decides whether A w = 0 has a solution with every w_i >= 1 (exact Phase-I simplex).
/// On success `solution` receives one such w scaled to integers.
bool positive_kernel_vector(const std::vector<std::vector<std::int64_t>>& a, std::vector<BigInt>* solution);

}  // namespace knotlab::detail
