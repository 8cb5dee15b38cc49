#include "knotlab/laurent.hpp"

#include <algorithm>
#include <charconv>

#include "knotlab/error.hpp"

namespace knotlab {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::from_coefficients(int low_exponent, std::vector<std::int64_t> coefficients) {
  LaurentPoly p;
  p.low_ = low_exponent;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  return from_coefficients(exponent, {coefficient});
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ = coeffs_.empty() ? 0 : low_ + static_cast<int>(lead);
}

std::int64_t LaurentPoly::coefficient(int exponent) const noexcept {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) t[low_ + static_cast<int>(i)] = coeffs_[i];
  return t;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return {};
  LaurentPoly p = from_coefficients(0, coeffs_);
  if (p.coeffs_.back() < 0)
    for (auto& c : p.coeffs_) c = -c;
  return p;
}

bool LaurentPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::int64_t LaurentPoly::value_at_unit(int t) const {
  if (t != 1 && t != -1) throw DomainError("value_at_unit: t must be 1 or -1");
  std::int64_t v = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    v += (t == -1 && (e % 2 != 0)) ? -coeffs_[i] : coeffs_[i];
  }
  return v;
}

std::string LaurentPoly::to_text() const {
  const LaurentPoly c = canonical();
  if (c.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::parse_text(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) throw ParseError("expected integer coefficient", i);
    coeffs.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list", 0);
  return from_coefficients(0, std::move(coeffs));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coefficient(e) + o.coefficient(e);
  return from_coefficients(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coefficients(low_ + o.low_, std::move(c));
}

}  // namespace knotlab
