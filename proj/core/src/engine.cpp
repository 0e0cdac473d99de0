#include "idu/engine.hpp"

#include <fmt/format.h>

namespace idu::engine {
namespace {

using layout::Modifier;

CodepointSeq standalone_for(const layout::Layout& layout, Accent accent) {
  if (const auto* dead = layout.find_dead_key(accent)) return dead->standalone;
  return CodepointSeq(1, unicode::spacing_form(accent));
}

bool is_key(const Chord& chord, std::string_view name) {
  return chord.key.name() == name;
}

// Handling of a press with nothing pending.
void process_idle(Step& step, const Chord& chord) {
  const auto& layout = *step.state.layout;
  if (const auto* binding = layout.find_direct(chord)) {
    step.commands.emplace_back(Suppress{});
    step.commands.emplace_back(Commit{binding->output});
    return;
  }
  if (const auto* dead = layout.find_dead_key(chord)) {
    step.commands.emplace_back(Suppress{});
    step.state.pending = dead->accent;
    return;
  }
  step.commands.emplace_back(PassThrough{});
}

void delete_back(CodepointSeq& document, BackspaceUnit unit, int count) {
  for (int i = 0; i < count && !document.empty(); ++i) {
    const std::size_t n = unit == BackspaceUnit::grapheme
                              ? unicode::last_cluster_length(document)
                              : 1;
    document.resize(document.size() - n);
  }
}

}  // namespace

KeyEvent press(std::string_view token) {
  const auto chord = layout::parse_chord_token(token);
  if (!chord) {
    throw std::invalid_argument(fmt::format("unknown key token '{}'", token));
  }
  return {*chord, Direction::press};
}

std::string_view to_string(BackspaceUnit unit) {
  return unit == BackspaceUnit::grapheme ? "grapheme" : "codepoint";
}

std::optional<BackspaceUnit> parse_backspace_unit(std::string_view name) {
  if (name == "grapheme") return BackspaceUnit::grapheme;
  if (name == "codepoint") return BackspaceUnit::codepoint;
  return std::nullopt;
}

std::string describe(const EditCommand& command) {
  struct Visitor {
    std::string operator()(const PassThrough&) const { return "pass_through"; }
    std::string operator()(const Suppress&) const { return "suppress"; }
    std::string operator()(const Commit& c) const {
      return fmt::format("commit({})", to_hex(c.text));
    }
    std::string operator()(const DeleteBackward& d) const {
      return fmt::format("delete_backward({}, {})", d.count, to_string(d.unit));
    }
  };
  return std::visit(Visitor{}, command);
}

EngineState initial_state(std::shared_ptr<const layout::Layout> layout,
                          BackspaceUnit unit) {
  return EngineState{std::move(layout), std::nullopt, unit};
}

Step process(const EngineState& state, const KeyEvent& event) {
  Step step{state, {}};
  const Chord& chord = event.chord;

  if (event.direction == Direction::release ||
      !chord.modifiers.is_layout_level()) {
    step.commands.emplace_back(PassThrough{});
    return step;
  }

  if (is_key(chord, "backspace")) {
    step.commands.emplace_back(Suppress{});
    if (step.state.pending) {
      step.state.pending.reset();
    } else {
      step.commands.emplace_back(DeleteBackward{1, state.backspace_unit});
    }
    return step;
  }

  if (!state.pending) {
    process_idle(step, chord);
    return step;
  }

  const Accent accent = *state.pending;
  const auto& layout = *state.layout;
  step.state.pending.reset();

  const auto* dead = layout.find_dead_key(chord);
  if ((dead && dead->accent == accent) || is_key(chord, "space")) {
    step.commands.emplace_back(Suppress{});
    step.commands.emplace_back(Commit{standalone_for(layout, accent)});
    return step;
  }
  if (const auto* binding = layout.find_composition(accent, chord)) {
    step.commands.emplace_back(Suppress{});
    step.commands.emplace_back(Commit{binding->output});
    return step;
  }
  // Failed composition: flush the accent, then treat the key as fresh input.
  step.commands.emplace_back(Commit{standalone_for(layout, accent)});
  process_idle(step, chord);
  return step;
}

Step select_popup(const EngineState& state, const KeyId& base_key,
                  std::size_t index) {
  const auto* strip = layout::popup_lookup(*state.layout, base_key);
  if (!strip) {
    throw NoStripError(
        fmt::format("no popup strip for key '{}'", base_key.name()));
  }
  if (index >= strip->entries.size()) {
    throw PopupIndexError(fmt::format(
        "popup index {} out of range for key '{}' (strip has {} entries)",
        index, base_key.name(), strip->entries.size()));
  }
  return Step{state, {Commit{strip->entries[index]}}};
}

std::optional<Codepoint> typed_character(const Chord& chord) {
  if (!chord.modifiers.is_layout_level()) return std::nullopt;
  auto c = chord.key.plain_character();
  if (!c) return std::nullopt;
  if (chord.key.is_letter() && chord.modifiers.has(Modifier::shift)) {
    *c = *c - U'a' + U'A';
  }
  return c;
}

CodepointSeq apply_commands(CodepointSeq document,
                            std::span<const EditCommand> commands,
                            const std::optional<KeyEvent>& event,
                            BackspaceUnit host_backspace) {
  for (const auto& command : commands) {
    if (const auto* commit = std::get_if<Commit>(&command)) {
      document += commit->text;
    } else if (const auto* del = std::get_if<DeleteBackward>(&command)) {
      delete_back(document, del->unit, del->count);
    } else if (std::holds_alternative<PassThrough>(command)) {
      if (!event || event->direction != Direction::press) continue;
      if (!event->chord.modifiers.is_layout_level()) continue;
      if (is_key(event->chord, "backspace")) {
        delete_back(document, host_backspace, 1);
      } else if (const auto c = typed_character(event->chord)) {
        document.push_back(*c);
      }
    }
  }
  return document;
}

Session::Session(std::shared_ptr<const layout::Layout> layout,
                 BackspaceUnit unit)
    : state_(initial_state(std::move(layout), unit)) {}

const std::vector<EditCommand>& Session::key(const KeyEvent& event) {
  Step step = process(state_, event);
  document_ = apply_commands(std::move(document_), step.commands, event,
                             state_.backspace_unit);
  state_ = std::move(step.state);
  last_ = std::move(step.commands);
  return last_;
}

const std::vector<EditCommand>& Session::popup(const KeyId& base_key,
                                               std::size_t index) {
  Step step = select_popup(state_, base_key, index);
  document_ = apply_commands(std::move(document_), step.commands, std::nullopt);
  state_ = std::move(step.state);
  last_ = std::move(step.commands);
  return last_;
}

}  // namespace idu::engine
