#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idu/codepoint.hpp"
#include "idu/unicode_core.hpp"

namespace idu::layout {

using unicode::Accent;

// Abstract key identifier. Letters are stored lowercase; symbols use their
// names ("backtick", "apostrophe", "tilde", "hyphen", ...).
class KeyId {
 public:
  // Accepts a letter or digit (either case), a key name, or the single
  // character of a symbol key ("`", "'", "~", "-", ...).
  static std::optional<KeyId> parse(std::string_view text);
  static KeyId from_known(std::string_view name);

  const std::string& name() const { return name_; }
  // Character the key types with no modifiers, if any.
  std::optional<Codepoint> plain_character() const;
  bool is_letter() const;

  auto operator<=>(const KeyId&) const = default;

 private:
  explicit KeyId(std::string name) : name_(std::move(name)) {}
  std::string name_;
};

enum class Modifier : std::uint8_t {
  shift = 1 << 0,
  altgr = 1 << 1,
  ctrl = 1 << 2,
  alt = 1 << 3,
  meta = 1 << 4,
};

std::string_view to_string(Modifier modifier);
std::optional<Modifier> parse_modifier(std::string_view name);

class ModifierSet {
 public:
  constexpr ModifierSet() = default;
  constexpr ModifierSet(std::initializer_list<Modifier> mods) {
    for (Modifier m : mods) bits_ |= static_cast<std::uint8_t>(m);
  }

  constexpr bool has(Modifier m) const {
    return (bits_ & static_cast<std::uint8_t>(m)) != 0;
  }
  constexpr ModifierSet with(Modifier m) const {
    ModifierSet s = *this;
    s.bits_ |= static_cast<std::uint8_t>(m);
    return s;
  }
  constexpr ModifierSet without(Modifier m) const {
    ModifierSet s = *this;
    s.bits_ &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(m));
    return s;
  }
  constexpr bool empty() const { return bits_ == 0; }
  // True when only shift and/or altgr are held.
  constexpr bool is_layout_level() const {
    return (bits_ & ~(static_cast<std::uint8_t>(Modifier::shift) |
                      static_cast<std::uint8_t>(Modifier::altgr))) == 0;
  }
  std::vector<Modifier> list() const;

  auto operator<=>(const ModifierSet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

struct Chord {
  KeyId key;
  ModifierSet modifiers;

  auto operator<=>(const Chord&) const = default;
};

// Replay-token form: modifier prefixes G- (altgr), S- (shift), C- (ctrl),
// A- (alt), M- (meta), then the key, e.g. "G-S-r", "G-~", "BKSP".
std::string to_token(const Chord& chord);
std::optional<Chord> parse_chord_token(std::string_view token);

enum class Platform { desktop, mobile };

std::string_view to_string(Platform platform);

struct Binding {
  CodepointSeq output;
  // Marks entries that go beyond the community's published character table.
  bool extension = false;

  bool operator==(const Binding&) const = default;
};

struct DeadKeyDef {
  Chord trigger;
  Accent accent = Accent::grave;
  CodepointSeq standalone;

  bool operator==(const DeadKeyDef&) const = default;
};

struct ComposeKey {
  Accent accent = Accent::grave;
  Chord chord;

  auto operator<=>(const ComposeKey&) const = default;
};

struct PopupStrip {
  KeyId base_key = KeyId::from_known("a");
  std::vector<CodepointSeq> entries;
  // Ordering not yet confirmed by the community.
  bool provisional = false;

  bool operator==(const PopupStrip&) const = default;
};

// A validated layout. Build through load_layout() to get the invariants.
struct Layout {
  std::string name;
  Platform platform = Platform::desktop;
  std::map<Chord, Binding> direct;
  std::vector<DeadKeyDef> dead_keys;
  std::map<ComposeKey, Binding> compose_table;
  std::vector<PopupStrip> popups;

  const Binding* find_direct(const Chord& chord) const;
  const DeadKeyDef* find_dead_key(const Chord& chord) const;
  const DeadKeyDef* find_dead_key(Accent accent) const;
  const Binding* find_composition(Accent accent, const Chord& chord) const;

  bool operator==(const Layout&) const = default;
};

// Raw, file-order view of a layout document. Holds duplicates and
// non-canonical sequences so that tooling can report them.
struct LayoutDocument {
  struct DirectEntry {
    Chord chord;
    Binding binding;
  };
  struct ComposeEntry {
    ComposeKey key;
    Binding binding;
  };

  std::string name;
  Platform platform = Platform::desktop;
  std::vector<DirectEntry> direct;
  std::vector<DeadKeyDef> dead_keys;
  std::vector<ComposeEntry> compose_table;
  std::vector<PopupStrip> popups;
};

enum class LayoutErrorKind {
  parse,
  schema,
  non_canonical_sequence,
  duplicate_chord,
  dead_key_conflict,
  platform_mismatch,
  empty_popup,
  duplicate_popup_entry,
};

std::string_view to_string(LayoutErrorKind kind);

struct LayoutIssue {
  LayoutErrorKind kind;
  // The offending entry, e.g. "direct[3] G-e" or "popups[e][2]".
  std::string entry;
  std::string detail;

  bool operator==(const LayoutIssue&) const = default;
};

class LayoutError : public std::runtime_error {
 public:
  explicit LayoutError(LayoutIssue issue);
  const LayoutIssue& issue() const { return issue_; }
  LayoutErrorKind kind() const { return issue_.kind; }

 private:
  LayoutIssue issue_;
};

// Schema-level parse: strict about field names and value types only.
// Throws LayoutError (parse or schema).
LayoutDocument parse_layout_document(std::string_view json_text);

// Every invariant violation in the document, in document order.
std::vector<LayoutIssue> check_document(const LayoutDocument& doc);

// Builds a Layout without checking invariants; first binding wins on
// duplicates. Meant for diagnostics on layouts that fail check_document().
Layout build_unchecked(const LayoutDocument& doc);

// parse + check + build. Throws LayoutError naming the first violation.
Layout load_layout(std::string_view json_text);
Layout load_layout_file(const std::filesystem::path& path);

std::string serialize_layout(const Layout& layout);

class PlatformError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Strip for `base_key`, or nullptr when the key has none. Throws
// PlatformError for desktop layouts.
const PopupStrip* popup_lookup(const Layout& layout, const KeyId& base_key);

}  // namespace idu::layout
