#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

/// Exact rational number; always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Decimal floating point with 60 significant digits; used wherever an
/// irrational constant (sqrt(3), sqrt(delta)) enters a numeric audit.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

/// Parses "p/q", "-7", "0.125", "1.5e-3". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& value, int digits = 50);
std::string to_decimal(const HighPrecision& value, int digits = 50);

HighPrecision to_high_precision(const Rational& value);

/// num / den in canonical form. Throws std::invalid_argument when den = 0.
Rational ratio(const Integer& num, const Integer& den);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// 2*sqrt(3) - 3, the B_rec limit density.
HighPrecision two_sqrt3_minus_3();

/// Symmetric matrix of rationals, stored densely row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;

  /// Frobenius inner product sum_ij a_ij b_ij.
  friend Rational inner(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

}  // namespace turan
