#include "exact.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "knotlab/error.hpp"

namespace knotlab::detail {

namespace {

__int128 checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw InconsistencyError("polynomial coefficient overflow");
  return r;
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InconsistencyError("polynomial coefficient overflow");
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<__int128> coeffs) : c(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<__int128> r(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a.c[i], b.c[j]));
  }
  return IntPoly(std::move(r));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  std::vector<__int128> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    if (b.c[i] == std::numeric_limits<__int128>::min()) throw InconsistencyError("polynomial coefficient overflow");
    r[i] = checked_add(r[i], -b.c[i]);
  }
  return IntPoly(std::move(r));
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InconsistencyError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.c.size() < b.c.size()) throw InconsistencyError("inexact polynomial division");
  std::vector<__int128> rem = a.c;
  std::vector<__int128> q(a.c.size() - b.c.size() + 1, 0);
  const __int128 lead = b.c.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const __int128 top = rem[k + b.c.size() - 1];
    if (top % lead != 0) throw InconsistencyError("inexact polynomial division");
    const __int128 f = top / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(f, b.c[j]));
  }
  for (__int128 r : rem)
    if (r != 0) throw InconsistencyError("inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly({1});
  bool negate = false;
  IntPoly prev({1});
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        m[i][j] = div_exact(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  IntPoly d = m[n - 1][n - 1];
  if (negate)
    for (auto& x : d.c) x = -x;
  return d;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int symmetric_signature(const std::vector<std::vector<std::int64_t>>& input) {
  const std::size_t n = input.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (input[i][j] != input[j][i]) throw InconsistencyError("signature: matrix is not symmetric");
      m[i][j] = input[i][j];
    }
  auto swap_index = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  auto add_index = [&](std::size_t dst, std::size_t src) {  // e_dst += e_src, congruently
    for (std::size_t j = 0; j < n; ++j) m[dst][j] += m[src][j];
    for (std::size_t i = 0; i < n; ++i) m[i][dst] += m[i][src];
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][p] == 0) ++p;
      if (p < n) {
        swap_index(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && m[k][q] == 0) ++q;
        if (q == n) continue;  // row k is zero
        add_index(k, q);
      }
    }
    const BigRational pivot = m[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const BigRational f = m[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) m[k][i] = 0;
    for (std::size_t i = k + 1; i < n; ++i) m[i][k] = 0;
  }
  return sig;
}

bool positive_kernel_vector(const std::vector<std::vector<std::int64_t>>& a, std::vector<BigInt>* solution) {
  const std::size_t rows = a.size();
  const std::size_t n = rows ? a[0].size() : 0;
  if (n == 0) return false;
  // w = 1 + x with x >= 0:  A x = -A 1.
  const std::size_t cols = n + rows;  // structural + artificial
  std::vector<std::vector<BigRational>> t(rows, std::vector<BigRational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != n) throw DomainError("positive_kernel_vector: ragged matrix");
    BigRational rhs = 0;
    for (std::size_t j = 0; j < n; ++j) rhs -= a[i][j];
    const int s = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = s * rhs;
    basis[i] = n + i;
  }
  // Phase-I objective: minimise the artificial sum, Bland's rule.
  std::vector<BigRational> cost(cols + 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < n || j == cols) cost[j] -= t[i][j];
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    BigRational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const BigRational r = t[i][cols] / t[i][enter];
      if (leave == rows || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == rows) throw InconsistencyError("phase-I simplex unbounded");
    const BigRational p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const BigRational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    const BigRational f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return false;
  if (solution) {
    std::vector<BigRational> w(n, BigRational(1));
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < n) w[basis[i]] += t[i][cols];
    BigInt scale = 1;
    for (const auto& x : w) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
    solution->clear();
    for (const auto& x : w) solution->push_back(boost::multiprecision::numerator(BigRational(x * scale)));
  }
  return true;
}

}  // namespace knotlab::detail
