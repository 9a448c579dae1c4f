#include "turan/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

Integer pow10(long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(num)), d);
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = std::string(body.substr(e + 1));
      std::size_t used = 0;
      try {
        exponent = std::stol(exp_text, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
      }
      if (used != exp_text.size()) throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
      body = body.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      auto whole = body.substr(0, dot);
      auto frac = body.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
      digits = std::string(whole) + std::string(frac);
      scale = static_cast<long>(frac.size());
    } else {
      if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
      digits = std::string(body);
    }
    scale -= exponent;
    Integer mantissa(digits);
    if (scale >= 0)
      result = Rational(mantissa, pow10(scale));
    else
      result = Rational(mantissa * pow10(-scale));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

HighPrecision to_high_precision(const Rational& value) {
  return HighPrecision(value.get_num().get_str()) / HighPrecision(value.get_den().get_str());
}

std::string to_decimal(const HighPrecision& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

std::string to_decimal(const Rational& value, int digits) {
  return to_decimal(to_high_precision(value), digits);
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

HighPrecision two_sqrt3_minus_3() {
  static const HighPrecision value = 2 * boost::multiprecision::sqrt(HighPrecision(3)) - 3;
  return value;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

Rational inner(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("inner product of matrices with different dimensions");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (sgn(a.data_[i]) != 0 && sgn(b.data_[i]) != 0) sum += a.data_[i] * b.data_[i];
  return sum;
}

}  // namespace turan
