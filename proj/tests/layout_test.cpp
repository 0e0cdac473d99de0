#include "idu/layout.hpp"

#include <gtest/gtest.h>

#include "idu/idu_layouts.hpp"
#include "test_support.hpp"

namespace idu::layout {
namespace {

const std::string kMinimalDesktop = R"({
  "name": "t",
  "platform": "desktop",
  "direct": [
    {"key": "E", "modifiers": ["altgr"], "output": "0259"}
  ],
  "deadKeys": [
    {"key": "backtick", "modifiers": ["altgr"], "accent": "grave", "standalone": "0060"}
  ],
  "composeTable": [
    {"accent": "grave", "key": "a", "modifiers": [], "output": "00E0"}
  ],
  "popups": []
})";

std::string with_direct(const std::string& extra) {
  std::string doc = kMinimalDesktop;
  const std::string anchor = R"("output": "0259"})";
  doc.insert(doc.find(anchor) + anchor.size(), ",\n    " + extra);
  return doc;
}

LayoutErrorKind kind_of(const std::string& text) {
  try {
    load_layout(text);
  } catch (const LayoutError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "layout loaded without error";
  return LayoutErrorKind::parse;
}

TEST(KeyIdTest, Parse) {
  EXPECT_EQ("e", KeyId::parse("E")->name());
  EXPECT_EQ("backtick", KeyId::parse("`")->name());
  EXPECT_EQ("tilde", KeyId::parse("~")->name());
  EXPECT_EQ("hyphen", KeyId::parse("-")->name());
  EXPECT_EQ("apostrophe", KeyId::parse("'")->name());
  EXPECT_EQ("backspace", KeyId::parse("BKSP")->name());
  EXPECT_EQ("space", KeyId::parse("Space")->name());
  EXPECT_FALSE(KeyId::parse("#").has_value());
  EXPECT_FALSE(KeyId::parse("f13").has_value());
}

TEST(ChordTokenTest, RoundTrip) {
  for (const char* token : {"e", "S-e", "G-e", "G-S-r", "G-~", "G--", "G-`",
                            "G-'", "BKSP", "C-c", "C-A-tab", "space"}) {
    const auto chord = parse_chord_token(token);
    ASSERT_TRUE(chord.has_value()) << token;
    EXPECT_EQ(token, to_token(*chord));
  }
  const auto chord = parse_chord_token("G-S-r");
  EXPECT_TRUE(chord->modifiers.has(Modifier::altgr));
  EXPECT_TRUE(chord->modifiers.has(Modifier::shift));
  EXPECT_EQ("r", chord->key.name());
  EXPECT_FALSE(parse_chord_token("X-e").has_value());
}

TEST(LoadLayoutTest, Minimal) {
  const Layout l = load_layout(kMinimalDesktop);
  EXPECT_EQ("t", l.name);
  const auto* b = l.find_direct({KeyId::from_known("e"), {Modifier::altgr}});
  ASSERT_NE(nullptr, b);
  EXPECT_EQ(CodepointSeq{0x0259}, b->output);
  ASSERT_NE(nullptr, l.find_dead_key(Accent::grave));
  EXPECT_NE(nullptr, l.find_composition(Accent::grave, {KeyId::from_known("a"), {}}));
}

TEST(LoadLayoutTest, ShippedDesktopFile) {
  const Layout l = load_layout_file(testing::data_dir() / "layouts" / "idu-desktop.json");
  const auto* b = l.find_direct({KeyId::from_known("e"), {Modifier::altgr}});
  ASSERT_NE(nullptr, b);
  EXPECT_EQ(CodepointSeq{0x0259}, b->output);
}

TEST(LoadLayoutTest, DuplicateChord) {
  EXPECT_EQ(LayoutErrorKind::duplicate_chord,
            kind_of(with_direct(R"({"key": "e", "modifiers": ["altgr"], "output": "0061"})")));
}

TEST(LoadLayoutTest, NonCanonicalOutput) {
  try {
    load_layout(with_direct(
        R"({"key": "r", "modifiers": ["altgr"], "output": "0259 0300 0331"})"));
    FAIL();
  } catch (const LayoutError& e) {
    EXPECT_EQ(LayoutErrorKind::non_canonical_sequence, e.kind());
    EXPECT_NE(std::string::npos, e.issue().entry.find("direct[1]"));
    EXPECT_NE(std::string::npos, e.issue().detail.find("0259 0331 0300"));
  }
}

TEST(LoadLayoutTest, DeadKeyDirectConflict) {
  EXPECT_EQ(LayoutErrorKind::dead_key_conflict,
            kind_of(with_direct(R"({"key": "`", "modifiers": ["altgr"], "output": "0061"})")));
}

TEST(LoadLayoutTest, SchemaErrors) {
  std::string unknown = kMinimalDesktop;
  unknown.insert(unknown.find("\"name\""), "\"colour\": \"red\", ");
  EXPECT_EQ(LayoutErrorKind::schema, kind_of(unknown));

  EXPECT_EQ(LayoutErrorKind::schema,
            kind_of(with_direct(R"({"key": "q", "modifiers": ["ctrl"], "output": "0061"})")));
  EXPECT_EQ(LayoutErrorKind::schema,
            kind_of(with_direct(R"({"key": "q", "modifiers": [], "output": "zz"})")));
  EXPECT_EQ(LayoutErrorKind::schema,
            kind_of(with_direct(R"({"key": "q", "modifiers": [], "output": ""})")));
  EXPECT_EQ(LayoutErrorKind::schema,
            kind_of(with_direct(R"({"key": "BKSP", "modifiers": [], "output": "0061"})")));
  EXPECT_EQ(LayoutErrorKind::schema,
            kind_of(with_direct(R"({"key": "q", "output": "0061"})")));
  EXPECT_EQ(LayoutErrorKind::parse, kind_of("{ not json"));
}

TEST(LoadLayoutTest, PlatformMismatch) {
  std::string doc = kMinimalDesktop;
  doc.replace(doc.find("\"popups\": []"), 13,
              R"("popups": [{"baseKey": "e", "entries": ["0259"]}])");
  EXPECT_EQ(LayoutErrorKind::platform_mismatch, kind_of(doc));
}

TEST(LoadLayoutTest, PopupChecks) {
  const auto mobile = [](const std::string& popups) {
    return R"({"name": "m", "platform": "mobile", "direct": [], "deadKeys": [],
               "composeTable": [], "popups": )" + popups + "}";
  };
  EXPECT_NO_THROW(load_layout(mobile(R"([{"baseKey": "e", "entries": ["0259"]}])")));
  EXPECT_EQ(LayoutErrorKind::empty_popup,
            kind_of(mobile(R"([{"baseKey": "e", "entries": []}])")));
  EXPECT_EQ(LayoutErrorKind::duplicate_popup_entry,
            kind_of(mobile(R"([{"baseKey": "e", "entries": ["0259", "0259"]}])")));
  EXPECT_EQ(LayoutErrorKind::non_canonical_sequence,
            kind_of(mobile(R"([{"baseKey": "e", "entries": ["0259 0300 0331"]}])")));
}

TEST(CheckDocumentTest, ReportsEveryIssue) {
  const auto doc = parse_layout_document(with_direct(
      R"({"key": "e", "modifiers": ["altgr"], "output": "0259 0300 0331"})"));
  const auto issues = check_document(doc);
  ASSERT_EQ(2u, issues.size());
  EXPECT_EQ(LayoutErrorKind::duplicate_chord, issues[0].kind);
  EXPECT_EQ(LayoutErrorKind::non_canonical_sequence, issues[1].kind);
  // First binding wins when building for diagnostics.
  const Layout l = build_unchecked(doc);
  EXPECT_EQ(CodepointSeq{0x0259},
            l.find_direct({KeyId::from_known("e"), {Modifier::altgr}})->output);
}

TEST(SerializeTest, RoundTripIsStable) {
  for (const Layout& original : {data::desktop_layout(), data::mobile_layout(),
                                 load_layout(kMinimalDesktop)}) {
    const Layout loaded = load_layout(serialize_layout(original));
    EXPECT_EQ(original, loaded) << original.name;
    EXPECT_EQ(serialize_layout(original), serialize_layout(loaded));
  }
}

TEST(SerializeTest, EveryLoadedSequenceIsCanonical) {
  const Layout l = load_layout(serialize_layout(data::desktop_layout()));
  for (const auto& [chord, b] : l.direct) EXPECT_TRUE(unicode::is_canonical(b.output));
  for (const auto& [key, b] : l.compose_table) EXPECT_TRUE(unicode::is_canonical(b.output));
  for (const auto& d : l.dead_keys) EXPECT_TRUE(unicode::is_canonical(d.standalone));
}

TEST(PopupLookupTest, Mobile) {
  const Layout l = data::mobile_layout();
  const auto* e = popup_lookup(l, KeyId::from_known("e"));
  ASSERT_NE(nullptr, e);
  ASSERT_GE(e->entries.size(), 14u);
  EXPECT_EQ(CodepointSeq{0x0259}, e->entries[0]);
  EXPECT_EQ((CodepointSeq{0x0259, 0x0331}), e->entries[1]);
  // accented schwa forms, then accented retracted schwa, then accented e
  for (std::size_t i = 2; i < 6; ++i) {
    EXPECT_EQ(0x0259u, e->entries[i].front());
    EXPECT_EQ(2u, e->entries[i].size());
  }
  for (std::size_t i = 6; i < 10; ++i) {
    EXPECT_EQ(3u, e->entries[i].size());
  }
  EXPECT_EQ((std::vector<CodepointSeq>{{0x00E8}, {0x00E9}, {0x1EBD}, {0x0113}}),
            std::vector<CodepointSeq>(e->entries.begin() + 10, e->entries.begin() + 14));

  EXPECT_EQ(nullptr, popup_lookup(l, KeyId::from_known("q")));

  const auto* o = popup_lookup(l, KeyId::from_known("o"));
  ASSERT_NE(nullptr, o);
  const auto has = [&](const CodepointSeq& s) {
    return std::find(o->entries.begin(), o->entries.end(), s) != o->entries.end();
  };
  EXPECT_TRUE(has({U'o', 0x0331}));
  for (Codepoint m : {0x0300, 0x0301, 0x0303, 0x0304}) {
    EXPECT_TRUE(has({U'o', 0x0331, m}));
  }
  for (const char* key : {"a", "e", "i", "o", "u"}) {
    const auto* s = popup_lookup(l, KeyId::from_known(key));
    ASSERT_NE(nullptr, s) << key;
    EXPECT_FALSE(s->entries.empty());
  }
}

TEST(PopupLookupTest, DesktopIsAnError) {
  EXPECT_THROW(popup_lookup(data::desktop_layout(), KeyId::from_known("e")),
               PlatformError);
}

}  // namespace
}  // namespace idu::layout
