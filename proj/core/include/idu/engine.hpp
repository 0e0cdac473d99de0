#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "idu/codepoint.hpp"
#include "idu/layout.hpp"

namespace idu::engine {

using layout::Chord;
using layout::KeyId;
using unicode::Accent;

enum class Direction { press, release };

struct KeyEvent {
  Chord chord;
  Direction direction = Direction::press;

  bool operator==(const KeyEvent&) const = default;
};

KeyEvent press(std::string_view token);

enum class BackspaceUnit { grapheme, codepoint };

std::string_view to_string(BackspaceUnit unit);
std::optional<BackspaceUnit> parse_backspace_unit(std::string_view name);

// Let the host handle the key as if no input method were running.
struct PassThrough {
  bool operator==(const PassThrough&) const = default;
};
// Swallow the original keystroke.
struct Suppress {
  bool operator==(const Suppress&) const = default;
};
struct Commit {
  CodepointSeq text;
  bool operator==(const Commit&) const = default;
};
struct DeleteBackward {
  int count = 1;
  BackspaceUnit unit = BackspaceUnit::grapheme;
  bool operator==(const DeleteBackward&) const = default;
};

using EditCommand = std::variant<PassThrough, Suppress, Commit, DeleteBackward>;

std::string describe(const EditCommand& command);

struct EngineState {
  std::shared_ptr<const layout::Layout> layout;
  std::optional<Accent> pending;
  BackspaceUnit backspace_unit = BackspaceUnit::grapheme;

  bool operator==(const EngineState& other) const {
    return layout == other.layout && pending == other.pending &&
           backspace_unit == other.backspace_unit;
  }
};

EngineState initial_state(std::shared_ptr<const layout::Layout> layout,
                          BackspaceUnit unit = BackspaceUnit::grapheme);

struct Step {
  EngineState state;
  std::vector<EditCommand> commands;
};

// One keystroke through the dead-key state machine. Total over well-formed
// input; every Commit payload is in canonical order.
Step process(const EngineState& state, const KeyEvent& event);

class NoStripError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PopupIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Commits entry `index` of the long-press strip for `base_key`. Throws
// layout::PlatformError, NoStripError or PopupIndexError.
Step select_popup(const EngineState& state, const KeyId& base_key,
                  std::size_t index);

// Host text-field simulation. `event` is the keystroke that produced the
// commands; it is needed to resolve PassThrough. A passed-through backspace
// deletes one unit of `host_backspace`.
CodepointSeq apply_commands(
    CodepointSeq document, std::span<const EditCommand> commands,
    const std::optional<KeyEvent>& event,
    BackspaceUnit host_backspace = BackspaceUnit::grapheme);

// Character a host inserts for an unhandled chord (shift uppercases
// letters), or nullopt for chords that insert no text.
std::optional<Codepoint> typed_character(const Chord& chord);

// Convenience wrapper that owns an EngineState and a document buffer.
class Session {
 public:
  explicit Session(std::shared_ptr<const layout::Layout> layout,
                   BackspaceUnit unit = BackspaceUnit::grapheme);

  const std::vector<EditCommand>& key(const KeyEvent& event);
  const std::vector<EditCommand>& popup(const KeyId& base_key,
                                        std::size_t index);

  const EngineState& state() const { return state_; }
  const CodepointSeq& document() const { return document_; }
  void set_backspace_unit(BackspaceUnit unit) { state_.backspace_unit = unit; }
  void clear() { document_.clear(); state_.pending.reset(); }

 private:
  EngineState state_;
  CodepointSeq document_;
  std::vector<EditCommand> last_;
};

}  // namespace idu::engine
