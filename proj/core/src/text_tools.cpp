#include <fmt/format.h>

#include "idu/toolchain.hpp"

namespace idu::tools {
namespace {

constexpr Codepoint kDottedCircle = 0x25CC;

bool printable(Codepoint cp) { return cp >= 0x20 && cp != 0x7F && !(cp >= 0x80 && cp < 0xA0); }

// Marks are drawn on a dotted circle so they stay visible in isolation.
std::string glyph(std::u32string_view text) {
  CodepointSeq shown;
  for (Codepoint cp : text) {
    if (!printable(cp)) {
      shown.push_back(0xFFFD);
      continue;
    }
    if (shown.empty() && unicode::ccc_or_starter(cp) != 0) {
      shown.push_back(kDottedCircle);
    }
    shown.push_back(cp);
  }
  return encode_utf8(shown);
}

}  // namespace

RepairOutcome repair_utf8(std::string_view bytes) {
  const auto repaired = unicode::repair_order_counted(decode_utf8(bytes));
  return {encode_utf8(repaired.text), repaired.reordered_runs};
}

std::string glyph_and_hex(std::u32string_view text) {
  return fmt::format("{} [{}]", glyph(text), to_hex(text));
}

std::string inspect(std::u32string_view text) {
  std::string out;
  std::size_t cluster = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Codepoint cp = text[i];
    const auto ccc = unicode::try_ccc(cp);
    const int cls = ccc.value_or(0);
    if (i == 0 || cls == 0) ++cluster;
    const std::string_view name = unicode::name(cp);
    out += fmt::format("{:<4} {:<6} {:<7} {:<3} {}\n",
                       fmt::format("[{}]", cluster), to_hex(cp),
                       fmt::format("ccc{}", cls),
                       glyph(std::u32string_view(&text[i], 1)),
                       name.empty() ? "(not in table)" : name);
  }
  return out;
}

}  // namespace idu::tools
