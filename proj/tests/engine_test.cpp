#include "idu/engine.hpp"

#include <random>

#include <gtest/gtest.h>

#include "idu/idu_layouts.hpp"

namespace idu::engine {
namespace {

using layout::KeyId;

class EngineTest : public ::testing::Test {
 protected:
  std::shared_ptr<const layout::Layout> desktop_ =
      std::make_shared<const layout::Layout>(data::desktop_layout());
  std::shared_ptr<const layout::Layout> mobile_ =
      std::make_shared<const layout::Layout>(data::mobile_layout());
};

Commit commit(CodepointSeq text) { return Commit{std::move(text)}; }

TEST_F(EngineTest, DirectMapping) {
  const auto step = process(initial_state(desktop_), press("G-e"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x0259})}), step.commands);
  EXPECT_FALSE(step.state.pending);

  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x0259, 0x0331})}),
            process(initial_state(desktop_), press("G-r")).commands);
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({U'U', 0x0331})}),
            process(initial_state(desktop_), press("G-S-u")).commands);
}

TEST_F(EngineTest, DeadKeyThenSchwa) {
  auto step = process(initial_state(desktop_), press("G-~"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}}), step.commands);
  EXPECT_EQ(Accent::nasal, step.state.pending);
  step = process(step.state, press("G-e"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x0259, 0x0303})}),
            step.commands);
  EXPECT_FALSE(step.state.pending);
}

TEST_F(EngineTest, DeadGraveThenRetractedSchwa) {
  auto step = process(initial_state(desktop_), press("G-`"));
  step = process(step.state, press("G-r"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x0259, 0x0331, 0x0300})}),
            step.commands);
}

TEST_F(EngineTest, UnmappedKeyPassesThrough) {
  const auto state = initial_state(desktop_);
  const auto step = process(state, press("k"));
  EXPECT_EQ((std::vector<EditCommand>{PassThrough{}}), step.commands);
  EXPECT_EQ(state, step.state);
}

TEST_F(EngineTest, ReleaseIsNeverTransformed) {
  auto pending = process(initial_state(desktop_), press("G-`")).state;
  KeyEvent release = press("G-e");
  release.direction = Direction::release;
  const auto step = process(pending, release);
  EXPECT_EQ((std::vector<EditCommand>{PassThrough{}}), step.commands);
  EXPECT_EQ(pending, step.state);
}

TEST_F(EngineTest, FailedCompositionCommitsStandaloneThenPassesThrough) {
  auto step = process(initial_state(desktop_), press("G-'"));
  step = process(step.state, press("z"));
  EXPECT_EQ((std::vector<EditCommand>{commit({0x00B4}), PassThrough{}}), step.commands);
  EXPECT_FALSE(step.state.pending);
}

TEST_F(EngineTest, SameDeadKeyOrSpaceCommitsStandalone) {
  auto step = process(initial_state(desktop_), press("G--"));
  step = process(step.state, press("G--"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x00AF})}), step.commands);
  EXPECT_FALSE(step.state.pending);

  step = process(process(step.state, press("G-`")).state, press("space"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}, commit({0x0060})}), step.commands);
  EXPECT_FALSE(step.state.pending);
}

TEST_F(EngineTest, SecondDeadKeyReplacesFirst) {
  auto step = process(initial_state(desktop_), press("G-`"));
  step = process(step.state, press("G-'"));
  EXPECT_EQ((std::vector<EditCommand>{commit({0x0060}), Suppress{}}), step.commands);
  EXPECT_EQ(Accent::acute, step.state.pending);
}

TEST_F(EngineTest, Backspace) {
  auto idle = process(initial_state(desktop_), press("BKSP"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{},
                                      DeleteBackward{1, BackspaceUnit::grapheme}}),
            idle.commands);

  auto step = process(initial_state(desktop_, BackspaceUnit::codepoint), press("BKSP"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{},
                                      DeleteBackward{1, BackspaceUnit::codepoint}}),
            step.commands);

  step = process(initial_state(desktop_), press("G-~"));
  step = process(step.state, press("BKSP"));
  EXPECT_EQ((std::vector<EditCommand>{Suppress{}}), step.commands);
  EXPECT_FALSE(step.state.pending);
}

TEST_F(EngineTest, ShortcutsPassThroughRegardlessOfPending) {
  const auto pending = process(initial_state(desktop_), press("G-`")).state;
  for (const char* token : {"C-c", "A-tab", "C-G-e", "M-e", "C-BKSP"}) {
    const auto step = process(pending, press(token));
    EXPECT_EQ((std::vector<EditCommand>{PassThrough{}}), step.commands) << token;
    EXPECT_EQ(pending, step.state) << token;
  }
}

TEST_F(EngineTest, MobileTapIsPlainLetter) {
  const auto step = process(initial_state(mobile_), press("e"));
  EXPECT_EQ((std::vector<EditCommand>{PassThrough{}}), step.commands);
}

TEST_F(EngineTest, SelectPopup) {
  const auto state = initial_state(mobile_);
  EXPECT_EQ((std::vector<EditCommand>{commit({0x0259})}),
            select_popup(state, KeyId::from_known("e"), 0).commands);
  EXPECT_EQ((std::vector<EditCommand>{commit({U'o', 0x0331, 0x0300})}),
            select_popup(state, KeyId::from_known("o"), 1).commands);
  EXPECT_THROW(select_popup(state, KeyId::from_known("e"), 99), PopupIndexError);
  EXPECT_THROW(select_popup(state, KeyId::from_known("q"), 0), NoStripError);
  EXPECT_THROW(select_popup(initial_state(desktop_), KeyId::from_known("e"), 0),
               layout::PlatformError);
}

TEST(ApplyCommandsTest, CommitAndDelete) {
  const CodepointSeq composed{0x0259, 0x0331, 0x0300};
  const std::vector<EditCommand> c{Commit{composed}};
  EXPECT_EQ(composed, apply_commands({}, c, std::nullopt));

  const std::vector<EditCommand> grapheme{DeleteBackward{1, BackspaceUnit::grapheme}};
  EXPECT_EQ(CodepointSeq{}, apply_commands(composed, grapheme, std::nullopt));

  const std::vector<EditCommand> codepoint{DeleteBackward{1, BackspaceUnit::codepoint}};
  EXPECT_EQ((CodepointSeq{0x0259, 0x0331}),
            apply_commands(composed, codepoint, std::nullopt));

  const std::vector<EditCommand> many{DeleteBackward{5, BackspaceUnit::codepoint}};
  EXPECT_EQ(CodepointSeq{}, apply_commands(composed, many, std::nullopt));
  EXPECT_EQ(CodepointSeq{}, apply_commands({}, grapheme, std::nullopt));
}

TEST(ApplyCommandsTest, PassThroughTypesPlainCharacter) {
  const std::vector<EditCommand> pass{PassThrough{}};
  EXPECT_EQ(CodepointSeq{U'k'}, apply_commands({}, pass, press("k")));
  EXPECT_EQ(CodepointSeq{U'K'}, apply_commands({}, pass, press("S-k")));
  EXPECT_EQ(CodepointSeq{U' '}, apply_commands({}, pass, press("space")));
  EXPECT_EQ(CodepointSeq{}, apply_commands({}, pass, press("C-c")));
  KeyEvent release = press("k");
  release.direction = Direction::release;
  EXPECT_EQ(CodepointSeq{}, apply_commands({}, pass, release));
  EXPECT_EQ(CodepointSeq{U'a'}, apply_commands({U'a', U'b'}, pass, press("BKSP")));
}

TEST_F(EngineTest, Determinism) {
  std::mt19937 rng(3);
  const char* tokens[] = {"G-e", "G-r", "G-`", "G-'", "G-~", "G--", "a", "e",
                          "S-o", "G-S-r", "z", "BKSP", "space", "C-c"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(tokens) - 1);
  std::vector<KeyEvent> events;
  for (int i = 0; i < 500; ++i) events.push_back(press(tokens[pick(rng)]));

  const auto run = [&] {
    std::vector<std::vector<EditCommand>> out;
    auto state = initial_state(desktop_);
    for (const auto& e : events) {
      auto step = process(state, e);
      out.push_back(step.commands);
      state = step.state;
    }
    return out;
  };
  EXPECT_EQ(run(), run());
}

TEST_F(EngineTest, PendingNeverStacks) {
  // Two dead keys in a row never leave the first accent pending.
  const char* dead[] = {"G-`", "G-'", "G-~", "G--"};
  for (const char* first : dead) {
    for (const char* second : dead) {
      const auto s1 = process(initial_state(desktop_), press(first)).state;
      const auto s2 = process(s1, press(second)).state;
      if (std::string_view(first) == second) {
        EXPECT_FALSE(s2.pending);
      } else {
        EXPECT_NE(s1.pending, s2.pending);
        EXPECT_TRUE(s2.pending.has_value());
      }
    }
  }
}

TEST_F(EngineTest, SessionTracksDocument) {
  Session session(desktop_, BackspaceUnit::codepoint);
  session.key(press("G-`"));
  EXPECT_EQ(Accent::grave, session.state().pending);
  session.key(press("G-r"));
  EXPECT_EQ((CodepointSeq{0x0259, 0x0331, 0x0300}), session.document());
  session.key(press("BKSP"));
  EXPECT_EQ((CodepointSeq{0x0259, 0x0331}), session.document());
}

}  // namespace
}  // namespace idu::engine
