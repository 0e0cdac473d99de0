#include "idu/idu_layouts.hpp"

#include <set>

#include <gtest/gtest.h>

#include "idu/toolchain.hpp"
#include "test_support.hpp"

namespace idu::data {
namespace {

using idu::testing::data_dir;
using idu::testing::read_text;
using unicode::Category;
using unicode::LetterCase;

TEST(InventoryTest, SizeAndCases) {
  const auto forms = inventory();
  EXPECT_EQ(44u, forms.size());
  std::size_t lower = 0;
  for (const auto& f : forms) lower += f.letter_case == LetterCase::lower;
  EXPECT_EQ(40u, lower);
  EXPECT_EQ(4u, forms.size() - lower);
}

TEST(InventoryTest, ContainsKeyForms) {
  std::set<CodepointSeq> seqs;
  for (const auto& f : inventory()) seqs.insert(f.sequence);
  EXPECT_TRUE(seqs.contains(CodepointSeq{0x0259}));
  EXPECT_TRUE(seqs.contains(CodepointSeq{0x018F}));
  EXPECT_TRUE(seqs.contains((CodepointSeq{0x0259, 0x0331, 0x0304})));
  EXPECT_TRUE(seqs.contains((CodepointSeq{U'U', 0x0331})));
  EXPECT_TRUE(seqs.contains(CodepointSeq{0x1EBD}));
  EXPECT_EQ(44u, seqs.size()) << "duplicate sequences";
}

TEST(InventoryTest, EveryFormIsCanonicalAndStartsWithBase) {
  for (const auto& f : inventory()) {
    EXPECT_TRUE(unicode::is_canonical(f.sequence)) << f.label;
    EXPECT_EQ(0, unicode::ccc(f.sequence.front())) << f.label;
  }
}

TEST(InventoryTest, CategoryCounts) {
  std::map<Category, int> count;
  for (const auto& f : inventory()) ++count[f.category];
  EXPECT_EQ(2, count[Category::schwa]);
  EXPECT_EQ(6, count[Category::retracted]);
  EXPECT_EQ(4, count[Category::accented_schwa]);
  EXPECT_EQ(5, count[Category::grave]);
  EXPECT_EQ(5, count[Category::macron]);
}

TEST(InventoryTest, ParseRejectsBadFiles) {
  EXPECT_THROW(parse_inventory("[]"), InventoryError);
  EXPECT_THROW(parse_inventory(R"({"name":"x","forms":[{"label":"a","category":"grave",)"
                               R"("case":"lower","sequence":"0061 0300 0331"}]})"),
               InventoryError);
  EXPECT_THROW(parse_inventory(R"({"name":"x","forms":[{"label":"a","category":"grave",)"
                               R"("case":"lower","sequence":"0300"}]})"),
               InventoryError);
}

TEST(DesktopLayoutTest, DirectMappings) {
  const auto desk = desktop_layout();
  const auto out = [&](const char* token) {
    const auto* b = desk.find_direct(*layout::parse_chord_token(token));
    return b ? b->output : CodepointSeq{};
  };
  EXPECT_EQ(CodepointSeq{0x0259}, out("G-e"));
  EXPECT_EQ(CodepointSeq{0x018F}, out("G-S-e"));
  EXPECT_EQ((CodepointSeq{0x0259, 0x0331}), out("G-r"));
  EXPECT_EQ((CodepointSeq{U'o', 0x0331}), out("G-o"));
  EXPECT_EQ((CodepointSeq{U'u', 0x0331}), out("G-u"));
  EXPECT_EQ((CodepointSeq{0x018F, 0x0331}), out("G-S-r"));
  EXPECT_EQ(4u, desk.dead_keys.size());
}

TEST(DesktopLayoutTest, LowercaseFormsWithinTwoChords) {
  const auto reach = tools::reachable_outputs(desktop_layout(), tools::kMaxChordDepth);
  for (const auto& f : inventory()) {
    const auto it = reach.find(f.sequence);
    ASSERT_NE(reach.end(), it) << f.label;
    if (f.letter_case == LetterCase::lower) EXPECT_LE(it->second.cost, 2) << f.label;
  }
}

TEST(MobileLayoutTest, StripContents) {
  const auto mob = mobile_layout();
  const auto* u = layout::popup_lookup(mob, layout::KeyId::from_known("u"));
  ASSERT_NE(nullptr, u);
  EXPECT_NE(u->entries.end(),
            std::find(u->entries.begin(), u->entries.end(),
                      CodepointSeq{U'u', 0x0331, 0x0303}));
  const auto* e = layout::popup_lookup(mob, layout::KeyId::from_known("e"));
  ASSERT_NE(nullptr, e);
  EXPECT_EQ(CodepointSeq{0x0259}, e->entries.front());
  EXPECT_TRUE(e->provisional);
}

TEST(ShippedDataTest, FilesMatchGenerator) {
  EXPECT_EQ(serialize_inventory(inventory()), read_text(data_dir() / "inventory.json"));
  EXPECT_EQ(layout::serialize_layout(desktop_layout()),
            read_text(data_dir() / "layouts" / "idu-desktop.json"));
  EXPECT_EQ(layout::serialize_layout(mobile_layout()),
            read_text(data_dir() / "layouts" / "idu-mobile.json"));
}

TEST(ShippedDataTest, RoundTrip) {
  EXPECT_EQ(inventory(), load_inventory_file(data_dir() / "inventory.json"));
  const auto desk = layout::load_layout_file(data_dir() / "layouts" / "idu-desktop.json");
  EXPECT_EQ(layout::serialize_layout(desktop_layout()), layout::serialize_layout(desk));
}

}  // namespace
}  // namespace idu::data
