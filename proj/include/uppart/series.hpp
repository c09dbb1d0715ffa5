#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "uppart/bigint.hpp"

namespace uppart {

/// Power series in q truncated after q^degree. Binary operations require
/// equal degrees.
class Series {
 public:
  explicit Series(std::size_t degree) : coeffs_(degree + 1) {}
  Series(std::size_t degree, std::vector<BigInt> coeffs);

  static Series monomial(std::size_t degree, std::size_t power, const BigInt& c = 1);
  /// 1 - q^power
  static Series one_minus_q_pow(std::size_t degree, std::size_t power);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const BigInt& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const BigInt& c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);

  /// a / b. Throws std::domain_error unless b's constant term is +1 or -1,
  /// which keeps the quotient integral.
  friend Series operator/(const Series& a, const Series& b);

  /// f(q) -> f(q^2), truncated.
  Series at_q_squared() const;
  /// Coefficients of even powers: result[n] = this[2n]. Degree halves.
  Series even_part() const;
  Series truncated(std::size_t degree) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  void check_same(const Series& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("series degree mismatch");
  }
  std::vector<BigInt> coeffs_;
};

}  // namespace uppart
