#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace lpn {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational used for biases; always kept in lowest terms.
using Rational = boost::rational<BigInt>;

/// Parses "NUM/DEN" (no decimals). Throws InvalidInput on malformed text.
Rational parse_fraction(std::string_view text);
/// "NUM/DEN" in lowest terms; integers print as "K/1".
std::string format_fraction(const Rational& value);

double to_double(const Rational& value);
/// Base-2 logarithm of a positive rational, evaluated as log2(num) - log2(den).
double log2_of(const Rational& value);

/// Throws InvalidInput unless 0 < eps <= 1/2.
void require_bias(const Rational& eps, std::string_view what = "eps");

/// Bias of the XOR of w independent samples of bias eps: 2^(w-1) * eps^w.
Rational piling_up_bias(const Rational& eps, unsigned w);

/// ceil(c / eps_tilde^2), the number of equations needed to tell bias
/// eps_tilde apart from a fair coin. c defaults to 1.
BigInt required_samples(const Rational& eps_tilde, const Rational& c = Rational(1));

}  // namespace lpn
