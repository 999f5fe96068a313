#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace lpn {

/// Packed vector over GF(2).
///
/// Coordinate j lives at bit (j mod 8) of byte (j div 8), least significant
/// bit first. Internally the bytes are grouped into little-endian 64-bit
/// words, so coordinate j is bit (j mod 64) of word (j div 64). Storage past
/// coordinate n-1 is always zero, which makes raw-storage equality the same
/// as vector equality.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t n);

  /// Builds a vector from a string of '0'/'1' characters, coordinate 0 first.
  static BitVec from_string(std::string_view bits);
  /// Builds a vector of dimension n from its lowercase hex byte encoding.
  static BitVec from_hex(std::string_view hex, std::size_t n);
  /// Low `n` bits of `value`, coordinate j = bit j.
  static BitVec from_uint(std::uint64_t value, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  std::span<Word> mutable_words() noexcept { return {words_.data(), words_.size()}; }

  bool get(std::size_t j) const;
  void set(std::size_t j, bool value);

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;

  /// True when coordinates [from, n) are all zero.
  bool is_zero_from(std::size_t from) const noexcept;
  /// True when coordinates [0, count) are all zero.
  bool is_zero_below(std::size_t count) const noexcept;

  /// Coordinates [from, from + count) as a new vector of dimension count.
  BitVec slice(std::size_t from, std::size_t count) const;
  /// Coordinates [0, count) packed into an integer; count <= 64.
  std::uint64_t low_bits(std::size_t count) const;

  BitVec& operator^=(const BitVec& other);

  /// "1011..." with coordinate 0 first.
  std::string to_string() const;
  /// ceil(n/8) bytes, lowercase hex, byte 0 first.
  std::string to_hex() const;

  /// Lexicographic comparison of the byte encodings (byte 0 first).
  /// Vectors of different dimension compare by dimension first.
  int compare_bytes(const BitVec& other) const noexcept;

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Zeroes storage above coordinate n-1.
  void canonicalize() noexcept;

 private:
  std::size_t n_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

/// Coordinate-wise XOR; throws InvalidInput on dimension mismatch.
BitVec bv_xor(const BitVec& a, const BitVec& b);

/// Parity of a AND b; throws InvalidInput on dimension mismatch.
bool inner_product(const BitVec& a, const BitVec& b);

}  // namespace lpn
