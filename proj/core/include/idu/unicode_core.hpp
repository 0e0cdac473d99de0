#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idu/codepoint.hpp"

namespace idu::unicode {

inline constexpr Codepoint kSchwa = 0x0259;
inline constexpr Codepoint kCapitalSchwa = 0x018F;
inline constexpr Codepoint kMacronBelow = 0x0331;  // retraction mark
inline constexpr Codepoint kCombiningGrave = 0x0300;
inline constexpr Codepoint kCombiningAcute = 0x0301;
inline constexpr Codepoint kCombiningTilde = 0x0303;
inline constexpr Codepoint kCombiningMacron = 0x0304;

// The four tone/nasality accents that dead keys and popups apply.
enum class Accent { grave, acute, nasal, macron };

inline constexpr Accent kAllAccents[] = {Accent::grave, Accent::acute,
                                         Accent::nasal, Accent::macron};

Codepoint combining_mark(Accent accent);
std::optional<Accent> accent_for_mark(Codepoint mark);
// Spacing form committed when a dead key does not compose:
// ` (U+0060), ´ (U+00B4), ~ (U+007E), ¯ (U+00AF).
Codepoint spacing_form(Accent accent);
std::string_view to_string(Accent accent);
std::optional<Accent> parse_accent(std::string_view name);

enum class Category {
  schwa,
  retracted,
  grave,
  acute,
  nasalized,
  macron,
  accented_schwa,
  accented_retracted_schwa,
  accented_retracted_o,
  accented_retracted_u,
};

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view name);

enum class LetterCase { lower, upper };

std::string_view to_string(LetterCase letter_case);
std::optional<LetterCase> parse_letter_case(std::string_view name);

// One orthographic character as the exact codepoint sequence to emit.
struct CharacterForm {
  CodepointSeq sequence;
  std::string label;
  Category category = Category::schwa;
  LetterCase letter_case = LetterCase::lower;

  bool operator==(const CharacterForm&) const = default;
};

class UnsupportedCodepoint : public std::runtime_error {
 public:
  explicit UnsupportedCodepoint(Codepoint cp);
  Codepoint codepoint() const { return codepoint_; }

 private:
  Codepoint codepoint_;
};

class NoComposition : public std::runtime_error {
 public:
  NoComposition(Codepoint base, Codepoint accent);
};

// True when the codepoint is in the embedded table (ASCII, Latin-1, Latin
// Extended-A, schwa, U+0300..U+036F and U+1EBC/D).
bool is_supported(Codepoint cp);

// Canonical combining class. Throws UnsupportedCodepoint outside the table.
int ccc(Codepoint cp);
std::optional<int> try_ccc(Codepoint cp);
// Like ccc() but treats codepoints outside the table as starters.
int ccc_or_starter(Codepoint cp) noexcept;

// Character name from the embedded table, or empty when unknown.
std::string_view name(Codepoint cp);

// Stably sorts every maximal run of non-starters by ascending ccc.
CodepointSeq repair_order(std::u32string_view text);

struct RepairResult {
  CodepointSeq text;
  std::size_t reordered_runs = 0;
};

RepairResult repair_order_counted(std::u32string_view text);

bool is_canonical(std::u32string_view text);

struct Precomposition {
  Codepoint base;
  Codepoint accent;
  Codepoint composed;
};

// Vowel (a e i o u, either case) x accent pairs that have a single
// precomposed codepoint.
std::span<const Precomposition> precomposition_table();
std::optional<Codepoint> precomposed(Codepoint base, Codepoint accent);

// Builds the accented form of `base`. Returns the precomposed codepoint
// when one exists, otherwise [base, accent]. `base` must be a vowel or
// schwa; `accent` one of U+0300, U+0301, U+0303, U+0304.
CharacterForm compose(Codepoint base, Codepoint accent);

// Fully decomposes every supported precomposed codepoint, then applies
// canonical ordering. Throws UnsupportedCodepoint for codepoints outside
// the table.
CodepointSeq decompose(std::u32string_view text);

// A cluster is one starter plus the non-starters that follow it. Leading
// non-starters form a cluster of their own.
std::vector<CodepointSeq> grapheme_split(std::u32string_view text);

// Length in codepoints of the last cluster of `text` (0 when empty).
std::size_t last_cluster_length(std::u32string_view text);

}  // namespace idu::unicode
