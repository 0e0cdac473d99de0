#include "idu/codepoint.hpp"

#include <cctype>
#include <charconv>
#include <fmt/format.h>

namespace idu {

std::string to_hex(Codepoint cp) {
  return fmt::format("{:04X}", static_cast<std::uint32_t>(cp));
}

std::string to_hex(std::u32string_view text) {
  std::string out;
  for (Codepoint cp : text) {
    if (!out.empty()) out.push_back(' ');
    out += to_hex(cp);
  }
  return out;
}

CodepointSeq parse_hex_sequence(std::string_view text) {
  CodepointSeq out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view item = text.substr(pos, end - pos);
    if (item.size() > 2 && (item[0] == 'U' || item[0] == 'u') &&
        item[1] == '+') {
      item.remove_prefix(2);
    }
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value, 16);
    if (ec != std::errc{} || ptr != item.data() + item.size() ||
        item.size() > 6) {
      throw HexParseError(fmt::format("invalid hex codepoint '{}'",
                                      text.substr(pos, end - pos)));
    }
    if (!is_scalar_value(value)) {
      throw HexParseError(
          fmt::format("'{}' is not a Unicode scalar value", item));
    }
    out.push_back(static_cast<Codepoint>(value));
    pos = end;
  }
  return out;
}

CodepointSeq decode_utf8(std::string_view bytes) {
  CodepointSeq out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    Codepoint cp = 0;
    Codepoint min = 0;
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
      min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
      min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
      min = 0x10000;
    } else {
      throw Utf8Error(fmt::format("invalid UTF-8 lead byte 0x{:02X}", lead), i);
    }
    if (i + len > bytes.size()) {
      throw Utf8Error("truncated UTF-8 sequence", i);
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Utf8Error(
            fmt::format("invalid UTF-8 continuation byte 0x{:02X}", cont),
            i + k);
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min) throw Utf8Error("overlong UTF-8 sequence", i);
    if (!is_scalar_value(cp)) {
      throw Utf8Error("UTF-8 sequence encodes a non-scalar value", i);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (Codepoint cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

}  // namespace idu
