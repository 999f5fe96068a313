#include "lpn/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "lpn/errors.hpp"

namespace lpn {
namespace {

std::size_t words_for(std::size_t n) { return (n + BitVec::kWordBits - 1) / BitVec::kWordBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

void require_same_size(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

}  // namespace

BitVec::BitVec(std::size_t n) : n_(n), words_(words_for(n), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != '0' && bits[j] != '1') throw InvalidInput("bit string must contain only 0/1");
    v.set(j, bits[j] == '1');
  }
  return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t n) {
  const std::size_t bytes = (n + 7) / 8;
  if (hex.size() != 2 * bytes) {
    throw InvalidInput("expected " + std::to_string(2 * bytes) + " hex digits for n=" +
                       std::to_string(n) + ", got " + std::to_string(hex.size()));
  }
  BitVec v(n);
  for (std::size_t i = 0; i < bytes; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw InvalidInput("invalid hex digit (lowercase 0-9a-f required)");
    const Word byte = static_cast<Word>(hi * 16 + lo);
    v.words_[i / 8] |= byte << (8 * (i % 8));
  }
  const auto before = v.words_;
  v.canonicalize();
  if (before != v.words_) throw InvalidInput("nonzero padding bits beyond coordinate n-1");
  return v;
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t n) {
  BitVec v(n);
  if (n > 0) {
    v.words_[0] = value;
    v.canonicalize();
  }
  return v;
}

bool BitVec::get(std::size_t j) const {
  if (j >= n_) throw InvalidInput("coordinate out of range");
  return (words_[j / kWordBits] >> (j % kWordBits)) & 1U;
}

void BitVec::set(std::size_t j, bool value) {
  if (j >= n_) throw InvalidInput("coordinate out of range");
  const Word mask = Word{1} << (j % kWordBits);
  if (value) {
    words_[j / kWordBits] |= mask;
  } else {
    words_[j / kWordBits] &= ~mask;
  }
}

bool BitVec::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::is_zero_from(std::size_t from) const noexcept {
  if (from >= n_) return true;
  std::size_t w = from / kWordBits;
  const std::size_t bit = from % kWordBits;
  if (bit != 0) {
    if ((words_[w] >> bit) != 0) return false;
    ++w;
  }
  for (; w < words_.size(); ++w) {
    if (words_[w] != 0) return false;
  }
  return true;
}

bool BitVec::is_zero_below(std::size_t count) const noexcept {
  count = std::min(count, n_);
  const std::size_t full = count / kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    if (words_[w] != 0) return false;
  }
  const std::size_t rem = count % kWordBits;
  if (rem != 0) {
    const Word mask = (Word{1} << rem) - 1;
    if ((words_[full] & mask) != 0) return false;
  }
  return true;
}

BitVec BitVec::slice(std::size_t from, std::size_t count) const {
  if (from + count > n_) throw InvalidInput("slice out of range");
  BitVec out(count);
  const std::size_t shift = from % kWordBits;
  const std::size_t base = from / kWordBits;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    Word value = words_[base + w] >> shift;
    if (shift != 0 && base + w + 1 < words_.size()) {
      value |= words_[base + w + 1] << (kWordBits - shift);
    }
    out.words_[w] = value;
  }
  out.canonicalize();
  return out;
}

std::uint64_t BitVec::low_bits(std::size_t count) const {
  if (count > kWordBits || count > n_) throw InvalidInput("low_bits: count out of range");
  if (count == 0) return 0;
  const Word w = words_[0];
  return count == kWordBits ? w : (w & ((Word{1} << count) - 1));
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t j = 0; j < n_; ++j) {
    if (get(j)) s[j] = '1';
  }
  return s;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (n_ + 7) / 8;
  std::string s;
  s.reserve(2 * bytes);
  for (std::size_t i = 0; i < bytes; ++i) {
    const auto byte = static_cast<unsigned>((words_[i / 8] >> (8 * (i % 8))) & 0xffU);
    s.push_back(kDigits[byte >> 4]);
    s.push_back(kDigits[byte & 0xfU]);
  }
  return s;
}

int BitVec::compare_bytes(const BitVec& other) const noexcept {
  if (n_ != other.n_) return n_ < other.n_ ? -1 : 1;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != other.words_[w]) {
      // Byte 0 is the least significant byte of the word, so swap to compare
      // in byte order.
      const Word a = __builtin_bswap64(words_[w]);
      const Word b = __builtin_bswap64(other.words_[w]);
      return a < b ? -1 : 1;
    }
  }
  return 0;
}

void BitVec::canonicalize() noexcept {
  const std::size_t rem = n_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

BitVec bv_xor(const BitVec& a, const BitVec& b) {
  BitVec out = a;
  out ^= b;
  return out;
}

bool inner_product(const BitVec& a, const BitVec& b) {
  require_same_size(a, b);
  const auto aw = a.words();
  const auto bw = b.words();
  BitVec::Word acc = 0;
  for (std::size_t w = 0; w < aw.size(); ++w) acc ^= aw[w] & bw[w];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace lpn
