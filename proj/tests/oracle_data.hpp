// Frozen oracle values computed with Python's unicodedata (Unicode 13.0.0):
//   NFC(base + accent) for every vowel/accent pair, NFD of each result, and
//   the combining class of every codepoint in the test alphabet.
#pragma once

#include <array>

namespace idu::oracle {

struct NfcCase {
  char32_t base;
  char32_t accent;
  char32_t composed;
};

inline constexpr std::array<NfcCase, 40> kNfcCases = {{
    {0x0061, 0x0300, 0x00E0},
    {0x0061, 0x0301, 0x00E1},
    {0x0061, 0x0303, 0x00E3},
    {0x0061, 0x0304, 0x0101},
    {0x0065, 0x0300, 0x00E8},
    {0x0065, 0x0301, 0x00E9},
    {0x0065, 0x0303, 0x1EBD},
    {0x0065, 0x0304, 0x0113},
    {0x0069, 0x0300, 0x00EC},
    {0x0069, 0x0301, 0x00ED},
    {0x0069, 0x0303, 0x0129},
    {0x0069, 0x0304, 0x012B},
    {0x006F, 0x0300, 0x00F2},
    {0x006F, 0x0301, 0x00F3},
    {0x006F, 0x0303, 0x00F5},
    {0x006F, 0x0304, 0x014D},
    {0x0075, 0x0300, 0x00F9},
    {0x0075, 0x0301, 0x00FA},
    {0x0075, 0x0303, 0x0169},
    {0x0075, 0x0304, 0x016B},
    {0x0041, 0x0300, 0x00C0},
    {0x0041, 0x0301, 0x00C1},
    {0x0041, 0x0303, 0x00C3},
    {0x0041, 0x0304, 0x0100},
    {0x0045, 0x0300, 0x00C8},
    {0x0045, 0x0301, 0x00C9},
    {0x0045, 0x0303, 0x1EBC},
    {0x0045, 0x0304, 0x0112},
    {0x0049, 0x0300, 0x00CC},
    {0x0049, 0x0301, 0x00CD},
    {0x0049, 0x0303, 0x0128},
    {0x0049, 0x0304, 0x012A},
    {0x004F, 0x0300, 0x00D2},
    {0x004F, 0x0301, 0x00D3},
    {0x004F, 0x0303, 0x00D5},
    {0x004F, 0x0304, 0x014C},
    {0x0055, 0x0300, 0x00D9},
    {0x0055, 0x0301, 0x00DA},
    {0x0055, 0x0303, 0x0168},
    {0x0055, 0x0304, 0x016A},
}};

struct CccCase {
  char32_t codepoint;
  int ccc;
};

inline constexpr std::array<CccCase, 65> kCccCases = {{
    {0x0020, 0},
    {0x0041, 0},
    {0x0045, 0},
    {0x0049, 0},
    {0x004F, 0},
    {0x0055, 0},
    {0x0061, 0},
    {0x0062, 0},
    {0x0065, 0},
    {0x0069, 0},
    {0x006B, 0},
    {0x006F, 0},
    {0x0075, 0},
    {0x00C0, 0},
    {0x00C1, 0},
    {0x00C3, 0},
    {0x00C8, 0},
    {0x00C9, 0},
    {0x00CC, 0},
    {0x00CD, 0},
    {0x00D2, 0},
    {0x00D3, 0},
    {0x00D5, 0},
    {0x00D9, 0},
    {0x00DA, 0},
    {0x00E0, 0},
    {0x00E1, 0},
    {0x00E3, 0},
    {0x00E8, 0},
    {0x00E9, 0},
    {0x00EC, 0},
    {0x00ED, 0},
    {0x00F2, 0},
    {0x00F3, 0},
    {0x00F5, 0},
    {0x00F9, 0},
    {0x00FA, 0},
    {0x0100, 0},
    {0x0101, 0},
    {0x0112, 0},
    {0x0113, 0},
    {0x0128, 0},
    {0x0129, 0},
    {0x012A, 0},
    {0x012B, 0},
    {0x014C, 0},
    {0x014D, 0},
    {0x0168, 0},
    {0x0169, 0},
    {0x016A, 0},
    {0x016B, 0},
    {0x018F, 0},
    {0x0259, 0},
    {0x0300, 230},
    {0x0301, 230},
    {0x0303, 230},
    {0x0304, 230},
    {0x0308, 230},
    {0x031B, 216},
    {0x0323, 220},
    {0x0327, 202},
    {0x0331, 220},
    {0x0345, 240},
    {0x1EBC, 0},
    {0x1EBD, 0},
}};

}  // namespace idu::oracle
