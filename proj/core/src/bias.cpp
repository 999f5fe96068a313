#include "lpn/bias.hpp"

#include <charconv>
#include <cmath>

#include "lpn/errors.hpp"

namespace lpn {
namespace {

BigInt parse_unsigned(std::string_view digits) {
  if (digits.empty()) throw InvalidInput("empty number in fraction");
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidInput("invalid digit in fraction: '" + std::string(1, c) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

// log2 of a non-negative big integer that may not fit into a double.
double log2_big(const BigInt& v) {
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 1000) return std::log2(v.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InvalidInput("expected a fraction NUM/DEN, got '" + std::string(text) + "'");
  }
  const BigInt num = parse_unsigned(text.substr(0, slash));
  const BigInt den = parse_unsigned(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_fraction(const Rational& value) {
  return value.numerator().str() + "/" + value.denominator().str();
}

double to_double(const Rational& value) {
  return value.numerator().convert_to<double>() / value.denominator().convert_to<double>();
}

double log2_of(const Rational& value) {
  if (value <= 0) throw InvalidInput("log2 of non-positive value");
  return log2_big(value.numerator()) - log2_big(value.denominator());
}

void require_bias(const Rational& eps, std::string_view what) {
  if (eps <= 0 || eps > Rational(1, 2)) {
    throw InvalidInput(std::string(what) + " must lie in (0, 1/2], got " + format_fraction(eps));
  }
}

Rational piling_up_bias(const Rational& eps, unsigned w) {
  require_bias(eps);
  if (w == 0) throw InvalidInput("combination weight w must be at least 1");
  const BigInt num = boost::multiprecision::pow(eps.numerator(), w) << (w - 1);
  const BigInt den = boost::multiprecision::pow(eps.denominator(), w);
  return Rational(num, den);
}

BigInt required_samples(const Rational& eps_tilde, const Rational& c) {
  if (eps_tilde <= 0) throw InvalidInput("eps_tilde must be positive");
  require_bias(eps_tilde, "eps_tilde");
  if (c <= 0) throw InvalidInput("sample constant c must be positive");
  const Rational q = c / (eps_tilde * eps_tilde);
  BigInt ceil = q.numerator() / q.denominator();
  if (ceil * q.denominator() != q.numerator()) ++ceil;
  return ceil;
}

}  // namespace lpn
