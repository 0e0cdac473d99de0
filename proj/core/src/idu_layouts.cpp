#include "idu/idu_layouts.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace idu::data {
namespace {

using json = nlohmann::ordered_json;
using layout::Binding;
using layout::Chord;
using layout::KeyId;
using layout::Modifier;
using layout::ModifierSet;
using unicode::Accent;
using unicode::Category;
using unicode::LetterCase;
using unicode::kCapitalSchwa;
using unicode::kMacronBelow;
using unicode::kSchwa;

constexpr char32_t kVowels[] = {U'a', U'e', U'i', U'o', U'u'};

// The three bases that take the retraction mark, with the AltGr key that
// types each one.
struct RetractedBase {
  Codepoint lower;
  Codepoint upper;
  const char* key;
  const char* name;
  Category accented_category;
};

constexpr RetractedBase kRetracted[] = {
    {kSchwa, kCapitalSchwa, "r", "schwa", Category::accented_retracted_schwa},
    {U'o', U'O', "o", "o", Category::accented_retracted_o},
    {U'u', U'U', "u", "u", Category::accented_retracted_u},
};

Codepoint upper(Codepoint c) {
  return c == kSchwa ? kCapitalSchwa : c - U'a' + U'A';
}

CodepointSeq retracted(Codepoint base) { return {base, kMacronBelow}; }

CodepointSeq retracted_accented(Codepoint base, Accent accent) {
  return {base, kMacronBelow, unicode::combining_mark(accent)};
}

CodepointSeq precomposed_vowel(Codepoint vowel, Accent accent) {
  return unicode::compose(vowel, unicode::combining_mark(accent)).sequence;
}

Chord chord(const char* key, ModifierSet mods) {
  return {KeyId::from_known(key), mods};
}

const ModifierSet kAltGr{Modifier::altgr};
const ModifierSet kAltGrShift{Modifier::altgr, Modifier::shift};
const ModifierSet kShift{Modifier::shift};

[[noreturn]] void inventory_error(const std::string& what) {
  throw InventoryError(what);
}

}  // namespace

std::vector<CharacterForm> inventory() {
  std::vector<CharacterForm> forms;
  forms.push_back({{kSchwa}, "small schwa", Category::schwa, LetterCase::lower});
  forms.push_back({{kCapitalSchwa}, "capital schwa", Category::schwa,
                   LetterCase::upper});
  for (const auto& r : kRetracted) {
    forms.push_back({retracted(r.lower), fmt::format("small retracted {}", r.name),
                     Category::retracted, LetterCase::lower});
    forms.push_back({retracted(r.upper),
                     fmt::format("capital retracted {}", r.name),
                     Category::retracted, LetterCase::upper});
  }
  for (Accent accent : unicode::kAllAccents) {
    for (char32_t v : kVowels) {
      forms.push_back(unicode::compose(v, unicode::combining_mark(accent)));
    }
  }
  for (Accent accent : unicode::kAllAccents) {
    forms.push_back(unicode::compose(kSchwa, unicode::combining_mark(accent)));
  }
  for (const auto& r : kRetracted) {
    for (Accent accent : unicode::kAllAccents) {
      forms.push_back({retracted_accented(r.lower, accent),
                       fmt::format("retracted {} with {}", r.name,
                                   unicode::to_string(accent)),
                       r.accented_category, LetterCase::lower});
    }
  }
  return forms;
}

layout::Layout desktop_layout() {
  layout::Layout l;
  l.name = "idu-azobra-desktop";
  l.platform = layout::Platform::desktop;

  l.direct[chord("e", kAltGr)] = {{kSchwa}, false};
  l.direct[chord("e", kAltGrShift)] = {{kCapitalSchwa}, false};
  for (const auto& r : kRetracted) {
    l.direct[chord(r.key, kAltGr)] = {retracted(r.lower), false};
    l.direct[chord(r.key, kAltGrShift)] = {retracted(r.upper), false};
  }

  const std::pair<const char*, Accent> dead[] = {
      {"backtick", Accent::grave},
      {"apostrophe", Accent::acute},
      {"tilde", Accent::nasal},
      {"hyphen", Accent::macron},
  };
  for (const auto& [key, accent] : dead) {
    l.dead_keys.push_back({chord(key, kAltGr), accent,
                           CodepointSeq(1, unicode::spacing_form(accent))});
  }

  for (Accent accent : unicode::kAllAccents) {
    const Codepoint mark = unicode::combining_mark(accent);
    for (char32_t v : kVowels) {
      const std::string key(1, static_cast<char>(v));
      l.compose_table[{accent, chord(key.c_str(), {})}] = {
          precomposed_vowel(v, accent), false};
      l.compose_table[{accent, chord(key.c_str(), kShift)}] = {
          precomposed_vowel(upper(v), accent), true};
    }
    l.compose_table[{accent, chord("e", kAltGr)}] = {{kSchwa, mark}, false};
    l.compose_table[{accent, chord("e", kAltGrShift)}] = {{kCapitalSchwa, mark},
                                                         true};
    for (const auto& r : kRetracted) {
      l.compose_table[{accent, chord(r.key, kAltGr)}] = {
          retracted_accented(r.lower, accent), false};
      l.compose_table[{accent, chord(r.key, kAltGrShift)}] = {
          retracted_accented(r.upper, accent), true};
    }
  }
  return l;
}

layout::Layout mobile_layout() {
  layout::Layout l;
  l.name = "idu-azobra-mobile";
  l.platform = layout::Platform::mobile;

  const auto strip = [&](const char* key) -> layout::PopupStrip& {
    l.popups.push_back({KeyId::from_known(key), {}, true});
    return l.popups.back();
  };
  const auto add_accented_vowel = [](layout::PopupStrip& s, Codepoint v) {
    for (Accent accent : unicode::kAllAccents) {
      s.entries.push_back(precomposed_vowel(v, accent));
    }
  };

  add_accented_vowel(strip("a"), U'a');

  // Idu-specific characters lead each strip, capitals trail it.
  auto& e = strip("e");
  e.entries.push_back({kSchwa});
  e.entries.push_back(retracted(kSchwa));
  for (Accent accent : unicode::kAllAccents) {
    e.entries.push_back({kSchwa, unicode::combining_mark(accent)});
  }
  for (Accent accent : unicode::kAllAccents) {
    e.entries.push_back(retracted_accented(kSchwa, accent));
  }
  add_accented_vowel(e, U'e');
  e.entries.push_back({kCapitalSchwa});
  e.entries.push_back(retracted(kCapitalSchwa));

  add_accented_vowel(strip("i"), U'i');

  for (char32_t v : {U'o', U'u'}) {
    const std::string key(1, static_cast<char>(v));
    auto& s = strip(key.c_str());
    s.entries.push_back(retracted(v));
    for (Accent accent : unicode::kAllAccents) {
      s.entries.push_back(retracted_accented(v, accent));
    }
    add_accented_vowel(s, v);
    s.entries.push_back(retracted(upper(v)));
  }
  return l;
}

std::vector<CharacterForm> parse_inventory(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    inventory_error(fmt::format("inventory parse error at byte {}: {}", e.byte,
                                e.what()));
  }
  if (!root.is_object() || !root.contains("forms") || !root["forms"].is_array()) {
    inventory_error("inventory must be an object with a 'forms' array");
  }
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (it.key() != "name" && it.key() != "forms") {
      inventory_error(fmt::format("inventory: unknown field '{}'", it.key()));
    }
  }

  std::vector<CharacterForm> forms;
  std::set<CodepointSeq> seen;
  const auto& items = root["forms"];
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    const std::string where = fmt::format("forms[{}]", i);
    if (!item.is_object()) inventory_error(where + ": expected an object");
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (it.key() != "label" && it.key() != "category" &&
          it.key() != "case" && it.key() != "sequence") {
        inventory_error(fmt::format("{}: unknown field '{}'", where, it.key()));
      }
    }
    for (const char* field : {"label", "category", "case", "sequence"}) {
      if (!item.contains(field) || !item[field].is_string()) {
        inventory_error(fmt::format("{}: missing string field '{}'", where, field));
      }
    }
    CharacterForm form;
    form.label = item["label"].get<std::string>();
    const auto category = unicode::parse_category(item["category"].get<std::string>());
    if (!category) inventory_error(where + ": unknown category");
    form.category = *category;
    const auto letter_case = unicode::parse_letter_case(item["case"].get<std::string>());
    if (!letter_case) inventory_error(where + ": case must be lower or upper");
    form.letter_case = *letter_case;
    try {
      form.sequence = parse_hex_sequence(item["sequence"].get<std::string>());
    } catch (const HexParseError& e) {
      inventory_error(fmt::format("{}: {}", where, e.what()));
    }
    if (form.sequence.empty()) inventory_error(where + ": empty sequence");
    if (unicode::ccc_or_starter(form.sequence.front()) != 0) {
      inventory_error(where + ": sequence must start with a base character");
    }
    if (!unicode::is_canonical(form.sequence)) {
      inventory_error(fmt::format("{}: {} is not in canonical order", where,
                                  to_hex(form.sequence)));
    }
    if (!seen.insert(form.sequence).second) {
      inventory_error(fmt::format("{}: duplicate sequence {}", where,
                                  to_hex(form.sequence)));
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

std::vector<CharacterForm> load_inventory_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) inventory_error(fmt::format("cannot open {}", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_inventory(buffer.str());
}

std::string serialize_inventory(const std::vector<CharacterForm>& forms) {
  json root = json::object();
  root["name"] = "idu-azobra";
  json items = json::array();
  for (const auto& f : forms) {
    items.push_back({{"label", f.label},
                     {"category", std::string(unicode::to_string(f.category))},
                     {"case", std::string(unicode::to_string(f.letter_case))},
                     {"sequence", to_hex(f.sequence)}});
  }
  std::string out = fmt::format("{{\n  \"name\": {},\n  \"forms\": [\n",
                                json(root["name"]).dump());
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += "    " + items[i].dump() + (i + 1 < items.size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace idu::data
