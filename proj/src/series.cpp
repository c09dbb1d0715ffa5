#include "uppart/series.hpp"

#include <algorithm>

namespace uppart {

Series::Series(std::size_t degree, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(degree + 1);
}

Series Series::monomial(std::size_t degree, std::size_t power, const BigInt& c) {
  Series s(degree);
  if (power <= degree) s[power] = c;
  return s;
}

Series Series::one_minus_q_pow(std::size_t degree, std::size_t power) {
  Series s = monomial(degree, 0);
  if (power <= degree) s[power] -= 1;
  return s;
}

Series& Series::operator+=(const Series& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_same(b);
  const std::size_t d = a.degree();
  Series out(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series operator/(const Series& a, const Series& b) {
  a.check_same(b);
  const BigInt& unit = b[0];
  if (unit != 1 && unit != -1) throw std::domain_error("series divisor must have constant term +-1");
  const std::size_t d = a.degree();
  Series out(d);
  for (std::size_t n = 0; n <= d; ++n) {
    BigInt acc = a[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (b[j] != 0) acc -= b[j] * out[n - j];
    }
    out[n] = unit == 1 ? acc : BigInt(-acc);
  }
  return out;
}

Series Series::at_q_squared() const {
  Series out(degree());
  for (std::size_t i = 0; 2 * i <= degree(); ++i) out[2 * i] = coeffs_[i];
  return out;
}

Series Series::even_part() const {
  Series out(degree() / 2);
  for (std::size_t i = 0; 2 * i <= degree(); ++i) out[i] = coeffs_[2 * i];
  return out;
}

Series Series::truncated(std::size_t degree) const {
  return Series(degree, std::vector<BigInt>(coeffs_.begin(),
                                            coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                  std::min(degree + 1, coeffs_.size()))));
}

}  // namespace uppart
