#pragma once

#include <cstdint>
#include <span>

namespace idu::unicode::detail {

struct CodepointRecord {
  char32_t codepoint;
  std::uint8_t ccc;
  const char* name;
};

struct DecompositionRecord {
  char32_t composed;
  char32_t base;
  char32_t mark;
};

// Both sorted ascending by their first field.
std::span<const CodepointRecord> codepoint_records();
// Canonical two-element decompositions only.
std::span<const DecompositionRecord> decomposition_records();

}  // namespace idu::unicode::detail
