#include "lpn/oracle.hpp"

#include <limits>
#include <string>

#include "lpn/errors.hpp"

namespace lpn {

void validate(const LpnInstance& instance) {
  if (instance.n == 0) throw InvalidInput("dimension n must be positive");
  require_bias(instance.eps);
  if (instance.key && instance.key->size() != instance.n) {
    throw InvalidInput("planted key has the wrong dimension");
  }
  for (std::size_t i = 0; i < instance.samples.size(); ++i) {
    if (instance.samples[i].coeffs.size() != instance.n) {
      throw InvalidInput("sample " + std::to_string(i) + " has the wrong dimension");
    }
  }
}

NoiseSource::NoiseSource(const Rational& eps) {
  require_bias(eps);
  const BigInt limit = std::numeric_limits<std::uint64_t>::max() / 2;
  if (eps.denominator() > limit) throw InvalidInput("eps denominator too large for the oracle");
  const auto num = eps.numerator().convert_to<std::uint64_t>();
  const auto den = eps.denominator().convert_to<std::uint64_t>();
  range_ = 2 * den;
  ones_ = den - 2 * num;
}

BitVec random_bitvec(std::size_t n, SplitMix64& rng) {
  BitVec v(n);
  for (auto& w : v.mutable_words()) w = rng.next();
  v.canonicalize();
  return v;
}

Sample oracle_sample(const BitVec& key, const Rational& eps, SplitMix64& rng) {
  const NoiseSource noise(eps);
  Sample s;
  s.coeffs = random_bitvec(key.size(), rng);
  s.rhs = inner_product(s.coeffs, key) != noise(rng);
  return s;
}

LpnInstance generate_instance(std::size_t n, const Rational& eps, std::size_t sample_count,
                              std::uint64_t seed) {
  if (n == 0) throw InvalidInput("dimension n must be positive");
  const NoiseSource noise(eps);
  SplitMix64 rng(seed);
  LpnInstance inst;
  inst.n = n;
  inst.eps = eps;
  inst.seed = seed;
  inst.key = random_bitvec(n, rng);
  inst.samples.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) {
    Sample s;
    s.coeffs = random_bitvec(n, rng);
    s.rhs = inner_product(s.coeffs, *inst.key) != noise(rng);
    inst.samples.push_back(std::move(s));
  }
  return inst;
}

}  // namespace lpn
