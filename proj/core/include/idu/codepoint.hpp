#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idu {

using Codepoint = char32_t;
using CodepointSeq = std::u32string;

inline constexpr Codepoint kMaxCodepoint = 0x10FFFF;

constexpr bool is_scalar_value(Codepoint cp) {
  return cp <= kMaxCodepoint && !(cp >= 0xD800 && cp <= 0xDFFF);
}

// Uppercase hex, at least four digits: U+0259 -> "0259".
std::string to_hex(Codepoint cp);
// Space-separated: "0259 0331 0300". Empty input gives "".
std::string to_hex(std::u32string_view text);

class HexParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses whitespace-separated hex codepoints. Accepts an optional "U+" prefix
// on each item; rejects surrogates and values above U+10FFFF.
CodepointSeq parse_hex_sequence(std::string_view text);

class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Strict decoder: rejects overlong forms, surrogates and truncated sequences.
CodepointSeq decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);

}  // namespace idu
