// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "idu/engine.hpp"
#include "idu/idu_layouts.hpp"
#include "idu/toolchain.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using namespace idu;
using idu::testing::data_dir;
using idu::testing::read_text;

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome inventory_coverage() {
  const auto start = std::chrono::steady_clock::now();
  const auto forms = data::load_inventory_file(data_dir() / "inventory.json");
  std::string detail;
  bool ok = forms.size() == 44;
  for (const char* file : {"idu-desktop.json", "idu-mobile.json"}) {
    const auto doc = layout::parse_layout_document(
        read_text(data_dir() / "layouts" / file));
    const auto report = tools::validate(doc, forms);
    int worst_lower = 0;
    for (const auto& f : forms) {
      const auto it = report.cost.find(f.sequence);
      if (it != report.cost.end() && f.letter_case == unicode::LetterCase::lower) {
        worst_lower = std::max(worst_lower, it->second);
      }
    }
    ok = ok && report.ok() && worst_lower <= 2;
    detail += fmt::format("{}: {} missing, {} conflicts, {} ordering, max lowercase cost {}; ",
                          file, report.missing.size(), report.conflicts.size(),
                          report.ordering_violations.size(), worst_lower);
  }
  const auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  ok = ok && ms < 1000.0;
  detail += fmt::format("{:.1f} ms", ms);
  return {ok, detail};
}

Outcome golden_suite() {
  int total = 0;
  int passed = 0;
  std::string first_failure;
  for (const char* platform : {"desktop", "mobile"}) {
    const auto lay = std::make_shared<const layout::Layout>(layout::load_layout_file(
        data_dir() / "layouts" / fmt::format("idu-{}.json", platform)));
    for (const fs::path root : {data_dir() / "golden" / "forms" / platform,
                                data_dir() / "golden" / "examples" / platform}) {
      for (const auto& entry : fs::directory_iterator(root)) {
        ++total;
        try {
          const auto result =
              tools::run_replay(lay, tools::parse_replay_script(read_text(entry.path())));
          if (result.passed && !result.expectations.empty()) {
            ++passed;
          } else if (first_failure.empty()) {
            first_failure = entry.path().filename().string();
          }
        } catch (const std::exception& e) {
          if (first_failure.empty()) first_failure = e.what();
        }
      }
    }
  }
  std::string detail = fmt::format("{}/{} scripts", passed, total);
  if (!first_failure.empty()) detail += ", first failure " + first_failure;
  return {total >= 88 + 12 && passed == total, detail};
}

Outcome commits_are_canonical() {
  const auto lay = std::make_shared<const layout::Layout>(data::desktop_layout());
  std::vector<std::string> tokens;
  for (const auto& [chord, b] : lay->direct) tokens.push_back(layout::to_token(chord));
  for (const auto& d : lay->dead_keys) tokens.push_back(layout::to_token(d.trigger));
  for (const auto& [k, b] : lay->compose_table) tokens.push_back(layout::to_token(k.chord));
  for (const char* t : {"a", "z", "S-a", "space", "BKSP", "C-c", "A-tab", "G-q"}) {
    tokens.emplace_back(t);
  }
  std::vector<engine::KeyEvent> events;
  for (const auto& t : tokens) events.push_back(engine::press(t));

  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
  std::uniform_int_distribution<int> length(1, 30);
  std::size_t commits = 0;
  for (int stream = 0; stream < 10000; ++stream) {
    auto state = engine::initial_state(lay);
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      const auto step = engine::process(state, events[pick(rng)]);
      for (const auto& c : step.commands) {
        if (const auto* commit = std::get_if<engine::Commit>(&c)) {
          ++commits;
          if (unicode::repair_order(commit->text) != commit->text) {
            return {false, "non-canonical commit " + to_hex(commit->text)};
          }
        }
      }
      state = step.state;
    }
  }
  return {commits > 0, fmt::format("10000 streams, {} commits checked", commits)};
}

Outcome repair_matches_oracle() {
  std::mt19937 rng(1789);
  const auto alphabet = idu::testing::oracle_alphabet();
  for (int i = 0; i < 1000; ++i) {
    const auto text = idu::testing::random_text(rng, alphabet, 32);
    const auto bytes = encode_utf8(text);
    const auto once = tools::repair_utf8(bytes).text;
    if (decode_utf8(once) != idu::testing::oracle_reorder(text)) {
      return {false, "mismatch on " + to_hex(text)};
    }
    const auto twice = tools::repair_utf8(once);
    if (twice.text != once || twice.changes != 0) {
      return {false, "not idempotent on " + to_hex(text)};
    }
  }
  return {true, "1000 random strings, output equals oracle and is a fixed point"};
}

Outcome backspace_units() {
  const auto lay = std::make_shared<const layout::Layout>(data::desktop_layout());
  const auto presses_to_empty = [&](engine::BackspaceUnit unit) {
    engine::Session session(lay, unit);
    session.key(engine::press("G-`"));
    session.key(engine::press("G-r"));
    if (session.document() != CodepointSeq{0x0259, 0x0331, 0x0300}) return -1;
    int n = 0;
    while (!session.document().empty() && n < 10) {
      session.key(engine::press("BKSP"));
      ++n;
    }
    return n;
  };
  const int grapheme = presses_to_empty(engine::BackspaceUnit::grapheme);
  const int codepoint = presses_to_empty(engine::BackspaceUnit::codepoint);
  return {grapheme == 1 && codepoint == 3,
          fmt::format("grapheme {} press, codepoint {} presses", grapheme, codepoint)};
}

// Stand-in for a host with no input method: printable keys insert their
// character, backspace removes the last character. Nothing it can type is a
// combining mark, so a character is a grapheme here.
CodepointSeq null_engine(const std::vector<std::string>& tokens) {
  CodepointSeq doc;
  for (const auto& t : tokens) {
    if (t == "BKSP") {
      if (!doc.empty()) doc.pop_back();
    } else if (t == "space") {
      doc.push_back(U' ');
    } else if (t.starts_with("S-")) {
      doc.push_back(static_cast<char32_t>(std::toupper(static_cast<unsigned char>(t[2]))));
    } else if (t.size() == 1) {
      doc.push_back(static_cast<char32_t>(t[0]));
    }
    // C- and A- chords insert nothing
  }
  return doc;
}

Outcome transparency() {
  const auto lay = std::make_shared<const layout::Layout>(data::desktop_layout());
  std::vector<std::string> alphabet;
  for (char c = 'a'; c <= 'z'; ++c) {
    alphabet.emplace_back(1, c);
    alphabet.push_back(std::string("S-") + c);
  }
  for (char c = '0'; c <= '9'; ++c) alphabet.emplace_back(1, c);
  for (const char* t : {"space", "BKSP", "C-c", "C-v", "A-tab", "C-S-z"}) {
    alphabet.emplace_back(t);
  }
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::string> tokens;
  for (int i = 0; i < 1000; ++i) tokens.push_back(alphabet[pick(rng)]);

  engine::Session session(lay, engine::BackspaceUnit::grapheme);
  for (const auto& t : tokens) session.key(engine::press(t));
  const auto expected = null_engine(tokens);
  return {session.document() == expected && !session.state().pending,
          fmt::format("1000 events, document length {} vs {}",
                      session.document().size(), expected.size())};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"inventory coverage on desktop and mobile", inventory_coverage},
      {"golden replay suite", golden_suite},
      {"random desktop streams commit canonical text", commits_are_canonical},
      {"repair agrees with reordering oracle", repair_matches_oracle},
      {"backspace granularity on retracted schwa with grave", backspace_units},
      {"plain typing matches a host without the engine", transparency},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, fmt::format("exception: {}", e.what())};
    }
    failed += !outcome.passed;
    fmt::print("{} {} ({})\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail);
  }
  fmt::print("{} of {} criteria passed\n", std::size(criteria) - failed,
             std::size(criteria));
  return failed == 0 ? 0 : 1;
}
