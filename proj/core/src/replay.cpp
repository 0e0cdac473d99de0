#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "idu/toolchain.hpp"

namespace idu::tools {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

void parse_directive(std::string_view body, int line, ReplayScript& script) {
  // body starts just after '#'
  if (body.empty() || is_space(body.front())) return;  // comment
  std::size_t name_end = 0;
  while (name_end < body.size() && !is_space(body[name_end])) ++name_end;
  const std::string_view name = body.substr(0, name_end);
  std::string_view arg = trim(body.substr(name_end));

  if (name == "expect") {
    if (arg.size() >= 2 && arg.front() == '"' && arg.back() == '"') {
      arg = arg.substr(1, arg.size() - 2);
    } else if (!arg.empty() && (arg.front() == '"' || arg.back() == '"')) {
      throw ReplayError(line, "unterminated quote in #expect");
    }
    try {
      script.steps.push_back({line, fmt::format("#expect \"{}\"", arg),
                              Expectation{parse_hex_sequence(arg)}});
    } catch (const HexParseError& e) {
      throw ReplayError(line, e.what());
    }
    return;
  }
  if (name == "backspace") {
    const auto unit = engine::parse_backspace_unit(arg);
    if (!unit) {
      throw ReplayError(line, fmt::format("#backspace expects grapheme or "
                                          "codepoint, got '{}'", arg));
    }
    script.steps.push_back({line, fmt::format("#backspace {}", arg),
                            SetBackspaceUnit{*unit}});
    return;
  }
  throw ReplayError(line, fmt::format("unknown directive '#{}'", name));
}

}  // namespace

ReplayError::ReplayError(int line, const std::string& what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

ReplayScript parse_replay_script(std::string_view text) {
  ReplayScript script;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    // A '#' that starts a word begins a directive or comment for the rest
    // of the line. "G-#" style tokens never occur: '#' is not a key.
    std::string_view tokens_part = line;
    std::optional<std::string_view> directive;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || is_space(line[i - 1]))) {
        tokens_part = line.substr(0, i);
        directive = line.substr(i + 1);
        break;
      }
    }

    const auto words = split_words(tokens_part);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const std::string_view word = words[i];
      if (word == "POPUP") {
        if (i + 2 >= words.size()) {
          throw ReplayError(line_no, "POPUP needs a key and an index");
        }
        const auto key = layout::KeyId::parse(words[i + 1]);
        if (!key) {
          throw ReplayError(line_no,
                            fmt::format("unknown popup key '{}'", words[i + 1]));
        }
        std::size_t index = 0;
        const auto idx = words[i + 2];
        auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
        if (ec != std::errc{} || ptr != idx.data() + idx.size()) {
          throw ReplayError(line_no,
                            fmt::format("invalid popup index '{}'", idx));
        }
        script.steps.push_back(
            {line_no, fmt::format("POPUP {} {}", key->name(), index),
             PopupSelection{*key, index}});
        i += 2;
        continue;
      }
      const auto chord = layout::parse_chord_token(word);
      if (!chord) {
        throw ReplayError(line_no, fmt::format("unknown key token '{}'", word));
      }
      script.steps.push_back(
          {line_no, std::string(word),
           engine::KeyEvent{*chord, engine::Direction::press}});
    }
    if (directive) parse_directive(*directive, line_no, script);
    pos = end + 1;
  }
  return script;
}

std::string codepoint_diff(std::u32string_view expected,
                           std::u32string_view actual) {
  std::size_t i = 0;
  while (i < expected.size() && i < actual.size() && expected[i] == actual[i]) {
    ++i;
  }
  std::string out = fmt::format("  expected: [{}]\n  actual:   [{}]\n",
                                to_hex(expected), to_hex(actual));
  if (i == expected.size() && i == actual.size()) return out;
  const auto at = [](std::u32string_view s, std::size_t k) {
    return k < s.size() ? "U+" + to_hex(s[k]) : std::string("end of text");
  };
  out += fmt::format("  first difference at codepoint {}: expected {}, got {}\n",
                     i, at(expected, i), at(actual, i));
  return out;
}

ReplayResult run_replay(std::shared_ptr<const layout::Layout> layout,
                        const ReplayScript& script,
                        engine::BackspaceUnit unit) {
  ReplayResult result;
  engine::Session session(std::move(layout), unit);

  const auto collect = [&](const std::vector<engine::EditCommand>& commands) {
    for (const auto& c : commands) {
      if (const auto* commit = std::get_if<engine::Commit>(&c)) {
        result.commits.push_back(commit->text);
      }
    }
  };

  for (const auto& step : script.steps) {
    if (const auto* event = std::get_if<engine::KeyEvent>(&step.action)) {
      collect(session.key(*event));
    } else if (const auto* popup = std::get_if<PopupSelection>(&step.action)) {
      try {
        collect(session.popup(popup->base_key, popup->index));
      } catch (const std::exception& e) {
        throw ReplayError(step.line, e.what());
      }
    } else if (const auto* set = std::get_if<SetBackspaceUnit>(&step.action)) {
      session.set_backspace_unit(set->unit);
    } else if (const auto* expect = std::get_if<Expectation>(&step.action)) {
      ExpectationOutcome outcome{step.line, expect->document,
                                 session.document(),
                                 expect->document == session.document()};
      result.expectations.push_back(outcome);
      if (!outcome.passed) {
        result.passed = false;
        result.diff = fmt::format("line {}: expectation failed\n{}", step.line,
                                  codepoint_diff(outcome.expected, outcome.actual));
        break;
      }
    }
  }
  result.document = session.document();
  return result;
}

}  // namespace idu::tools
