#include "pls/bits.hpp"

#include <cassert>

namespace pls {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

char to_hex_digit(int v) { return "0123456789abcdef"[v]; }

}  // namespace

BitString BitString::from_string(std::string_view bits01) {
  BitString s;
  for (char c : bits01) {
    assert(c == '0' || c == '1');
    s.push_back(c == '1');
  }
  return s;
}

BitString BitString::from_uint(std::uint64_t value, int width) {
  BitString s;
  for (int i = width - 1; i >= 0; --i) s.push_back((value >> i) & 1);
  return s;
}

std::vector<BitString> BitString::all_of_length(int len) {
  std::vector<BitString> out;
  out.reserve(std::size_t(1) << len);
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << len); ++v)
    out.push_back(from_uint(v, len));
  return out;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  assert(pos + len <= nbits_);
  BitString out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(bit(pos + i));
  return out;
}

std::uint64_t BitString::to_uint(std::size_t pos, std::size_t len) const {
  assert(len <= 64 && pos + len <= nbits_);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = (v << 1) | (bit(pos + i) ? 1 : 0);
  return v;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(nbits_);
  for (std::size_t i = 0; i < nbits_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

std::string BitString::to_hex() const {
  std::string out;
  for (std::size_t i = 0; i < nbits_; i += 4) {
    int v = 0;
    for (std::size_t j = i; j < i + 4; ++j) {
      v <<= 1;
      if (j < nbits_ && bit(j)) v |= 1;
    }
    out.push_back(to_hex_digit(v));
  }
  return out;
}

std::optional<BitString> BitString::from_hex(std::string_view hex, std::size_t nbits) {
  if (hex.size() * 4 < nbits || hex.size() * 4 >= nbits + 4) return std::nullopt;
  BitString s;
  for (char c : hex) {
    int v = hex_digit(c);
    if (v < 0) return std::nullopt;
    for (int j = 3; j >= 0; --j) s.push_back((v >> j) & 1);
  }
  // padding bits beyond nbits must be zero
  for (std::size_t i = nbits; i < s.size(); ++i)
    if (s.bit(i)) return std::nullopt;
  return s.slice(0, nbits);
}

std::string BitString::to_hex_marked() const {
  BitString padded = *this;
  padded.push_back(true);
  while (padded.size() % 4 != 0) padded.push_back(false);
  return padded.to_hex();
}

std::optional<BitString> BitString::from_hex_marked(std::string_view hex) {
  if (hex.empty()) return std::nullopt;
  BitString s;
  for (char c : hex) {
    int v = hex_digit(c);
    if (v < 0) return std::nullopt;
    for (int j = 3; j >= 0; --j) s.push_back((v >> j) & 1);
  }
  std::size_t end = s.size();
  while (end > 0 && !s.bit(end - 1)) --end;
  if (end == 0) return std::nullopt;  // marker missing
  return s.slice(0, end - 1);
}

void BitString::append_vlq(std::uint64_t value) {
  do {
    std::uint8_t group = value & 0x7f;
    value >>= 7;
    if (value != 0) group |= 0x80;
    for (int j = 7; j >= 0; --j) push_back((group >> j) & 1);
  } while (value != 0);
}

std::optional<std::pair<std::uint64_t, std::size_t>> BitString::read_vlq(
    std::size_t pos) const {
  std::uint64_t value = 0;
  int shift = 0;
  while (true) {
    if (pos + 8 > nbits_ || shift > 56) return std::nullopt;
    std::uint64_t group = to_uint(pos, 8);
    pos += 8;
    value |= (group & 0x7f) << shift;
    if ((group & 0x80) == 0) return std::make_pair(value, pos);
    shift += 7;
  }
}

BitString BitString::encode_tuple(const std::vector<BitString>& parts) {
  BitString out;
  for (const BitString& p : parts) {
    out.append_vlq(p.size());
    out.append(p);
  }
  return out;
}

std::optional<std::vector<BitString>> BitString::decode_tuple(const BitString& s) {
  std::vector<BitString> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto vlq = s.read_vlq(pos);
    if (!vlq) return std::nullopt;
    auto [len, next] = *vlq;
    if (next + len > s.size()) return std::nullopt;
    parts.push_back(s.slice(next, len));
    pos = next + len;
  }
  return parts;
}

}  // namespace pls
