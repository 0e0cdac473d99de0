#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idu/engine.hpp"
#include "idu/layout.hpp"
#include "idu/unicode_core.hpp"

namespace idu::tools {

using unicode::CharacterForm;

// ---------------------------------------------------------------------------
// Reachability

struct Reach {
  int cost = 0;                     // keystrokes or popup selections
  std::vector<std::string> tokens;  // replay tokens of one cheapest path
};

// Every sequence the layout can commit in a single Commit, with the cheapest
// way to produce it from an idle engine. Keystroke paths are explored
// breadth-first up to `max_chords`; each popup entry costs one selection.
std::map<CodepointSeq, Reach> reachable_outputs(const layout::Layout& layout,
                                                int max_chords);

// ---------------------------------------------------------------------------
// validate

inline constexpr int kMaxChordDepth = 2;

struct ValidationReport {
  std::string layout_name;
  layout::Platform platform = layout::Platform::desktop;
  std::size_t inventory_size = 0;
  std::vector<CharacterForm> missing;
  std::vector<std::string> conflicts;
  std::vector<std::string> ordering_violations;
  std::map<CodepointSeq, int> cost;

  bool ok() const {
    return missing.empty() && conflicts.empty() && ordering_violations.empty();
  }
};

ValidationReport validate(const layout::LayoutDocument& doc,
                          const std::vector<CharacterForm>& inventory,
                          int max_chords = kMaxChordDepth);

std::string format_report(const ValidationReport& report);

// ---------------------------------------------------------------------------
// replay

struct PopupSelection {
  layout::KeyId base_key;
  std::size_t index = 0;
};

struct Expectation {
  CodepointSeq document;
};

struct SetBackspaceUnit {
  engine::BackspaceUnit unit = engine::BackspaceUnit::grapheme;
};

struct ReplayStep {
  int line = 0;
  std::string source;
  std::variant<engine::KeyEvent, PopupSelection, Expectation, SetBackspaceUnit>
      action;
};

struct ReplayScript {
  std::vector<ReplayStep> steps;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Grammar, one or more steps per line:
//   e  S-e  G-e  G-S-r  G-~  BKSP  space   key tokens
//   POPUP <key> <index>                    long-press selection
//   #expect "0259 0303"                    document must equal these codepoints
//   #backspace grapheme|codepoint          switch the backspace unit
//   # free text                            comment
// Throws ReplayError naming the line of the first bad token.
ReplayScript parse_replay_script(std::string_view text);

struct ExpectationOutcome {
  int line = 0;
  CodepointSeq expected;
  CodepointSeq actual;
  bool passed = false;
};

struct ReplayResult {
  CodepointSeq document;
  std::vector<ExpectationOutcome> expectations;
  std::vector<CodepointSeq> commits;
  bool passed = true;
  std::string diff;  // set on the first failing expectation
};

// Stops at the first failing expectation. Popup steps against a layout that
// cannot serve them raise ReplayError.
ReplayResult run_replay(std::shared_ptr<const layout::Layout> layout,
                        const ReplayScript& script,
                        engine::BackspaceUnit unit = engine::BackspaceUnit::grapheme);

std::string codepoint_diff(std::u32string_view expected,
                           std::u32string_view actual);

// ---------------------------------------------------------------------------
// repair

struct RepairOutcome {
  std::string text;
  std::size_t changes = 0;  // reordered mark runs
};

// Throws Utf8Error carrying the byte offset of invalid input.
RepairOutcome repair_utf8(std::string_view bytes);

// ---------------------------------------------------------------------------
// inspect

// One line per codepoint: cluster number, hex, ccc, glyph, name.
std::string inspect(std::u32string_view text);

// Glyph followed by its hex, e.g. "ə̱ [0259 0331]".
std::string glyph_and_hex(std::u32string_view text);

}  // namespace idu::tools
