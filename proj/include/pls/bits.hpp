#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pls {

/// Arbitrary-length bit string, msb-first within each byte. This is the
/// currency of every labeling scheme: labels, node inputs, shared strings.
class BitString {
 public:
  BitString() = default;

  static BitString from_string(std::string_view bits01);
  static BitString from_uint(std::uint64_t value, int width);
  /// All bit strings of length `len`, in increasing numeric order.
  static std::vector<BitString> all_of_length(int len);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool bit(std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }

  void push_back(bool b) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_[nbits_ >> 3] |= std::uint8_t(1u << (7 - (nbits_ & 7)));
    ++nbits_;
  }

  void append(const BitString& other) {
    for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
  }

  BitString slice(std::size_t pos, std::size_t len) const;
  std::uint64_t to_uint(std::size_t pos, std::size_t len) const;

  friend bool operator==(const BitString& a, const BitString& b) {
    if (a.nbits_ != b.nbits_) return false;
    for (std::size_t i = 0; i < a.nbits_; ++i)
      if (a.bit(i) != b.bit(i)) return false;
    return true;
  }
  friend bool operator!=(const BitString& a, const BitString& b) {
    return !(a == b);
  }
  friend bool operator<(const BitString& a, const BitString& b) {
    if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
    for (std::size_t i = 0; i < a.nbits_; ++i)
      if (a.bit(i) != b.bit(i)) return b.bit(i);
    return false;
  }

  std::string to_string() const;  // "0101..."

  /// Plain hex of the bits, zero-padded to a nibble boundary. The exact
  /// length must be carried separately (labeling dump format does).
  std::string to_hex() const;
  static std::optional<BitString> from_hex(std::string_view hex, std::size_t nbits);

  /// Self-delimiting hex: the bits are followed by a '1' marker and zero
  /// fill up to a nibble boundary, so arbitrary bit lengths survive a
  /// plain hex token (graph-file `i` lines).
  std::string to_hex_marked() const;
  static std::optional<BitString> from_hex_marked(std::string_view hex);

  // --- variable-length quantities and tuple framing -----------------------
  // Tuples of strings are encoded by prefixing each component with its bit
  // length as a VLQ of 8-bit groups (7 payload bits + continuation bit,
  // least-significant group first). Decoding consumes components until the
  // string is exhausted; trailing garbage or truncation is a format error.

  void append_vlq(std::uint64_t value);
  /// Returns {value, next position} or nullopt on truncation/overlong input.
  std::optional<std::pair<std::uint64_t, std::size_t>> read_vlq(std::size_t pos) const;

  static BitString encode_tuple(const std::vector<BitString>& parts);
  static std::optional<std::vector<BitString>> decode_tuple(const BitString& s);

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

}  // namespace pls
