#include "lightspan/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lightspan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Decimal only; the BigInt string constructor reads a leading 0 as octal.
BigInt decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("not a rational: " + std::string(text));
    const BigInt d = decimal(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    value = Rational(decimal(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("not a decimal: " + std::string(text));
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(decimal(whole) * scale + decimal(frac), scale);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("not a number: " + std::string(text));
    value = Rational(decimal(text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return r.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

}  // namespace lightspan
