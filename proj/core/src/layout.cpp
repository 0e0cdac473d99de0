#include "idu/layout.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace idu::layout {
namespace {

using json = nlohmann::ordered_json;

struct NamedKey {
  std::string_view name;
  char symbol;  // '\0' when the key has no single-character alias
  Codepoint plain;
};

constexpr std::array<NamedKey, 17> kNamedKeys{{
    {"backtick", '`', U'`'},
    {"apostrophe", '\'', U'\''},
    {"tilde", '~', U'~'},
    {"hyphen", '-', U'-'},
    {"equals", '=', U'='},
    {"comma", ',', U','},
    {"period", '.', U'.'},
    {"semicolon", ';', U';'},
    {"slash", '/', U'/'},
    {"backslash", '\\', U'\\'},
    {"bracketleft", '[', U'['},
    {"bracketright", ']', U']'},
    {"space", '\0', U' '},
    {"enter", '\0', U'\n'},
    {"tab", '\0', U'\t'},
    {"backspace", '\0', 0},
    {"escape", '\0', 0},
}};

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

constexpr std::array<std::pair<Modifier, std::string_view>, 5> kModifierNames{{
    {Modifier::altgr, "altgr"},
    {Modifier::shift, "shift"},
    {Modifier::ctrl, "ctrl"},
    {Modifier::alt, "alt"},
    {Modifier::meta, "meta"},
}};

// Token prefixes, in the order they are written.
constexpr std::array<std::pair<Modifier, char>, 5> kTokenPrefixes{{
    {Modifier::ctrl, 'C'},
    {Modifier::alt, 'A'},
    {Modifier::meta, 'M'},
    {Modifier::altgr, 'G'},
    {Modifier::shift, 'S'},
}};

[[noreturn]] void schema_error(const std::string& entry,
                               const std::string& detail) {
  throw LayoutError({LayoutErrorKind::schema, entry, detail});
}

void require_fields(const json& obj, const std::string& entry,
                    std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional) {
  if (!obj.is_object()) schema_error(entry, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known =
        std::find(required.begin(), required.end(), it.key()) !=
            required.end() ||
        std::find(optional.begin(), optional.end(), it.key()) !=
            optional.end();
    if (!known) schema_error(entry, fmt::format("unknown field '{}'", it.key()));
  }
  for (auto field : required) {
    if (!obj.contains(std::string(field))) {
      schema_error(entry, fmt::format("missing field '{}'", field));
    }
  }
}

std::string get_string(const json& obj, std::string_view field,
                       const std::string& entry) {
  const auto& v = obj.at(std::string(field));
  if (!v.is_string()) {
    schema_error(entry, fmt::format("field '{}' must be a string", field));
  }
  return v.get<std::string>();
}

bool get_flag(const json& obj, std::string_view field,
              const std::string& entry) {
  if (!obj.contains(std::string(field))) return false;
  const auto& v = obj.at(std::string(field));
  if (!v.is_boolean()) {
    schema_error(entry, fmt::format("field '{}' must be a boolean", field));
  }
  return v.get<bool>();
}

const json& get_array(const json& obj, std::string_view field,
                      const std::string& entry) {
  const auto& v = obj.at(std::string(field));
  if (!v.is_array()) {
    schema_error(entry, fmt::format("field '{}' must be an array", field));
  }
  return v;
}

CodepointSeq get_sequence(const json& obj, std::string_view field,
                          const std::string& entry) {
  const std::string text = get_string(obj, field, entry);
  CodepointSeq seq;
  try {
    seq = parse_hex_sequence(text);
  } catch (const HexParseError& e) {
    schema_error(entry, fmt::format("field '{}': {}", field, e.what()));
  }
  if (seq.empty()) {
    schema_error(entry, fmt::format("field '{}' must not be empty", field));
  }
  return seq;
}

Chord get_chord(const json& obj, const std::string& entry) {
  const std::string key_text = get_string(obj, "key", entry);
  const auto key = KeyId::parse(key_text);
  if (!key) schema_error(entry, fmt::format("unknown key '{}'", key_text));
  if (key->name() == "backspace") {
    schema_error(entry, "backspace is reserved and cannot be bound");
  }
  ModifierSet mods;
  for (const auto& m : get_array(obj, "modifiers", entry)) {
    if (!m.is_string()) schema_error(entry, "modifiers must be strings");
    const auto mod = parse_modifier(m.get<std::string>());
    if (!mod || !(*mod == Modifier::shift || *mod == Modifier::altgr)) {
      schema_error(entry, fmt::format("modifier '{}' is not allowed in a "
                                      "layout (use shift or altgr)",
                                      m.get<std::string>()));
    }
    mods = mods.with(*mod);
  }
  return {*key, mods};
}

Accent get_accent(const json& obj, const std::string& entry) {
  const std::string text = get_string(obj, "accent", entry);
  const auto accent = unicode::parse_accent(text);
  if (!accent) schema_error(entry, fmt::format("unknown accent '{}'", text));
  return *accent;
}

json modifiers_json(ModifierSet mods) {
  json arr = json::array();
  for (Modifier m : mods.list()) arr.push_back(std::string(to_string(m)));
  return arr;
}

std::string chord_label(const Chord& chord) { return to_token(chord); }

// Two-level layout: top-level fields on their own lines, array items one per
// line. Keeps diffs of community edits to a line each.
std::string dump_one_entry_per_line(const json& root) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (auto it = root.begin(); it != root.end(); ++it, ++i) {
    out += fmt::format("  {}: ", json(it.key()).dump());
    if (it->is_array() && !it->empty()) {
      out += "[\n";
      for (std::size_t k = 0; k < it->size(); ++k) {
        out += "    " + (*it)[k].dump();
        out += k + 1 < it->size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      out += it->dump();
    }
    out += i + 1 < root.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::optional<KeyId> KeyId::parse(std::string_view text) {
  if (text.size() == 1) {
    const char c = text[0];
    if (std::isalnum(static_cast<unsigned char>(c))) {
      return KeyId(std::string(1, static_cast<char>(
                                      std::tolower(static_cast<unsigned char>(c)))));
    }
    for (const auto& k : kNamedKeys) {
      if (k.symbol != '\0' && k.symbol == c) return KeyId(std::string(k.name));
    }
    return std::nullopt;
  }
  const std::string lower = lowercase(text);
  if (lower == "bksp") return KeyId("backspace");
  if (lower == "spc") return KeyId("space");
  for (const auto& k : kNamedKeys) {
    if (k.name == lower) return KeyId(lower);
  }
  return std::nullopt;
}

KeyId KeyId::from_known(std::string_view name) {
  auto key = parse(name);
  if (!key) throw std::invalid_argument(fmt::format("unknown key '{}'", name));
  return *key;
}

std::optional<Codepoint> KeyId::plain_character() const {
  if (name_.size() == 1) return static_cast<Codepoint>(name_[0]);
  for (const auto& k : kNamedKeys) {
    if (k.name == name_) {
      if (k.plain == 0) return std::nullopt;
      return k.plain;
    }
  }
  return std::nullopt;
}

bool KeyId::is_letter() const {
  return name_.size() == 1 && name_[0] >= 'a' && name_[0] <= 'z';
}

std::string_view to_string(Modifier modifier) {
  for (const auto& [m, n] : kModifierNames) {
    if (m == modifier) return n;
  }
  return "shift";
}

std::optional<Modifier> parse_modifier(std::string_view name) {
  const std::string lower = lowercase(name);
  for (const auto& [m, n] : kModifierNames) {
    if (n == lower) return m;
  }
  return std::nullopt;
}

std::vector<Modifier> ModifierSet::list() const {
  std::vector<Modifier> out;
  for (const auto& [m, n] : kModifierNames) {
    if (has(m)) out.push_back(m);
  }
  return out;
}

std::string to_token(const Chord& chord) {
  std::string token;
  for (const auto& [m, prefix] : kTokenPrefixes) {
    if (chord.modifiers.has(m)) {
      token.push_back(prefix);
      token.push_back('-');
    }
  }
  const std::string& name = chord.key.name();
  if (name == "backspace") {
    token += "BKSP";
    return token;
  }
  for (const auto& k : kNamedKeys) {
    if (k.name == name && k.symbol != '\0') {
      token.push_back(k.symbol);
      return token;
    }
  }
  token += name;
  return token;
}

std::optional<Chord> parse_chord_token(std::string_view token) {
  ModifierSet mods;
  while (token.size() > 2 && token[1] == '-') {
    const auto it = std::find_if(
        kTokenPrefixes.begin(), kTokenPrefixes.end(),
        [&](const auto& p) { return p.second == token[0]; });
    if (it == kTokenPrefixes.end()) break;
    mods = mods.with(it->first);
    token.remove_prefix(2);
  }
  const auto key = KeyId::parse(token);
  if (!key) return std::nullopt;
  return Chord{*key, mods};
}

std::string_view to_string(Platform platform) {
  return platform == Platform::desktop ? "desktop" : "mobile";
}

const Binding* Layout::find_direct(const Chord& chord) const {
  const auto it = direct.find(chord);
  return it == direct.end() ? nullptr : &it->second;
}

const DeadKeyDef* Layout::find_dead_key(const Chord& chord) const {
  for (const auto& d : dead_keys) {
    if (d.trigger == chord) return &d;
  }
  return nullptr;
}

const DeadKeyDef* Layout::find_dead_key(Accent accent) const {
  for (const auto& d : dead_keys) {
    if (d.accent == accent) return &d;
  }
  return nullptr;
}

const Binding* Layout::find_composition(Accent accent,
                                        const Chord& chord) const {
  const auto it = compose_table.find(ComposeKey{accent, chord});
  return it == compose_table.end() ? nullptr : &it->second;
}

std::string_view to_string(LayoutErrorKind kind) {
  switch (kind) {
    case LayoutErrorKind::parse: return "parse error";
    case LayoutErrorKind::schema: return "schema violation";
    case LayoutErrorKind::non_canonical_sequence: return "non-canonical sequence";
    case LayoutErrorKind::duplicate_chord: return "duplicate chord";
    case LayoutErrorKind::dead_key_conflict: return "dead-key/direct conflict";
    case LayoutErrorKind::platform_mismatch: return "platform mismatch";
    case LayoutErrorKind::empty_popup: return "empty popup strip";
    case LayoutErrorKind::duplicate_popup_entry: return "duplicate popup entry";
  }
  return "layout error";
}

LayoutError::LayoutError(LayoutIssue issue)
    : std::runtime_error(fmt::format("{}: {}{}{}", to_string(issue.kind),
                                     issue.entry,
                                     issue.detail.empty() ? "" : ": ",
                                     issue.detail)),
      issue_(std::move(issue)) {}

LayoutDocument parse_layout_document(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LayoutError({LayoutErrorKind::parse,
                       fmt::format("byte {}", e.byte), e.what()});
  }

  require_fields(root, "layout",
                 {"name", "platform", "direct", "deadKeys", "composeTable",
                  "popups"},
                 {});

  LayoutDocument doc;
  doc.name = get_string(root, "name", "layout");
  const std::string platform = get_string(root, "platform", "layout");
  if (platform == "desktop") {
    doc.platform = Platform::desktop;
  } else if (platform == "mobile") {
    doc.platform = Platform::mobile;
  } else {
    schema_error("layout", fmt::format("unknown platform '{}'", platform));
  }

  const auto& direct = get_array(root, "direct", "layout");
  for (std::size_t i = 0; i < direct.size(); ++i) {
    const std::string entry = fmt::format("direct[{}]", i);
    require_fields(direct[i], entry, {"key", "modifiers", "output"},
                   {"extension"});
    doc.direct.push_back({get_chord(direct[i], entry),
                          {get_sequence(direct[i], "output", entry),
                           get_flag(direct[i], "extension", entry)}});
  }

  const auto& dead = get_array(root, "deadKeys", "layout");
  for (std::size_t i = 0; i < dead.size(); ++i) {
    const std::string entry = fmt::format("deadKeys[{}]", i);
    require_fields(dead[i], entry, {"key", "modifiers", "accent", "standalone"},
                   {});
    doc.dead_keys.push_back({get_chord(dead[i], entry),
                             get_accent(dead[i], entry),
                             get_sequence(dead[i], "standalone", entry)});
  }

  const auto& compose = get_array(root, "composeTable", "layout");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string entry = fmt::format("composeTable[{}]", i);
    require_fields(compose[i], entry, {"accent", "key", "modifiers", "output"},
                   {"extension"});
    doc.compose_table.push_back(
        {{get_accent(compose[i], entry), get_chord(compose[i], entry)},
         {get_sequence(compose[i], "output", entry),
          get_flag(compose[i], "extension", entry)}});
  }

  const auto& popups = get_array(root, "popups", "layout");
  for (std::size_t i = 0; i < popups.size(); ++i) {
    const std::string entry = fmt::format("popups[{}]", i);
    require_fields(popups[i], entry, {"baseKey", "entries"}, {"provisional"});
    PopupStrip strip;
    const std::string key_text = get_string(popups[i], "baseKey", entry);
    const auto key = KeyId::parse(key_text);
    if (!key) schema_error(entry, fmt::format("unknown key '{}'", key_text));
    strip.base_key = *key;
    strip.provisional = get_flag(popups[i], "provisional", entry);
    const auto& entries = get_array(popups[i], "entries", entry);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string item = fmt::format("{}.entries[{}]", entry, k);
      if (!entries[k].is_string()) schema_error(item, "expected a hex string");
      try {
        auto seq = parse_hex_sequence(entries[k].get<std::string>());
        if (seq.empty()) schema_error(item, "empty sequence");
        strip.entries.push_back(std::move(seq));
      } catch (const HexParseError& e) {
        schema_error(item, e.what());
      }
    }
    doc.popups.push_back(std::move(strip));
  }
  return doc;
}

std::vector<LayoutIssue> check_document(const LayoutDocument& doc) {
  std::vector<LayoutIssue> issues;
  const auto check_canonical = [&](const CodepointSeq& seq,
                                   const std::string& entry) {
    if (!unicode::is_canonical(seq)) {
      issues.push_back({LayoutErrorKind::non_canonical_sequence, entry,
                        fmt::format("{} should be {}", to_hex(seq),
                                    to_hex(unicode::repair_order(seq)))});
    }
  };

  if (doc.platform == Platform::desktop && !doc.popups.empty()) {
    issues.push_back({LayoutErrorKind::platform_mismatch, "popups",
                      "desktop layouts cannot define popup strips"});
  }
  if (doc.platform == Platform::mobile &&
      (!doc.dead_keys.empty() || !doc.compose_table.empty())) {
    issues.push_back({LayoutErrorKind::platform_mismatch, "deadKeys",
                      "mobile layouts cannot define dead keys or compositions"});
  }

  std::map<Chord, std::size_t> direct_seen;
  for (std::size_t i = 0; i < doc.direct.size(); ++i) {
    const auto& d = doc.direct[i];
    const std::string entry =
        fmt::format("direct[{}] {}", i, chord_label(d.chord));
    auto [it, inserted] = direct_seen.emplace(d.chord, i);
    if (!inserted) {
      issues.push_back({LayoutErrorKind::duplicate_chord, entry,
                        fmt::format("already bound by direct[{}]", it->second)});
    }
    check_canonical(d.binding.output, entry);
  }

  std::map<Chord, std::size_t> dead_seen;
  for (std::size_t i = 0; i < doc.dead_keys.size(); ++i) {
    const auto& d = doc.dead_keys[i];
    const std::string entry =
        fmt::format("deadKeys[{}] {}", i, chord_label(d.trigger));
    auto [it, inserted] = dead_seen.emplace(d.trigger, i);
    if (!inserted) {
      issues.push_back(
          {LayoutErrorKind::duplicate_chord, entry,
           fmt::format("already bound by deadKeys[{}]", it->second)});
    }
    if (const auto found = direct_seen.find(d.trigger);
        found != direct_seen.end()) {
      issues.push_back(
          {LayoutErrorKind::dead_key_conflict, entry,
           fmt::format("trigger is also bound by direct[{}]", found->second)});
    }
    check_canonical(d.standalone, entry);
  }

  std::map<ComposeKey, std::size_t> compose_seen;
  for (std::size_t i = 0; i < doc.compose_table.size(); ++i) {
    const auto& c = doc.compose_table[i];
    const std::string entry =
        fmt::format("composeTable[{}] {} + {}", i, unicode::to_string(c.key.accent),
                    chord_label(c.key.chord));
    auto [it, inserted] = compose_seen.emplace(c.key, i);
    if (!inserted) {
      issues.push_back(
          {LayoutErrorKind::duplicate_chord, entry,
           fmt::format("already bound by composeTable[{}]", it->second)});
    }
    check_canonical(c.binding.output, entry);
  }

  std::set<KeyId> strip_keys;
  for (const auto& strip : doc.popups) {
    const std::string entry = fmt::format("popups[{}]", strip.base_key.name());
    if (!strip_keys.insert(strip.base_key).second) {
      issues.push_back({LayoutErrorKind::duplicate_chord, entry,
                        "base key has more than one strip"});
    }
    if (strip.entries.empty()) {
      issues.push_back({LayoutErrorKind::empty_popup, entry, ""});
    }
    std::set<CodepointSeq> seen;
    for (std::size_t k = 0; k < strip.entries.size(); ++k) {
      const std::string item = fmt::format("{}[{}]", entry, k);
      if (!seen.insert(strip.entries[k]).second) {
        issues.push_back({LayoutErrorKind::duplicate_popup_entry, item,
                          to_hex(strip.entries[k])});
      }
      check_canonical(strip.entries[k], item);
    }
  }
  return issues;
}

Layout build_unchecked(const LayoutDocument& doc) {
  Layout layout;
  layout.name = doc.name;
  layout.platform = doc.platform;
  for (const auto& d : doc.direct) layout.direct.emplace(d.chord, d.binding);
  for (const auto& d : doc.dead_keys) {
    if (!layout.find_dead_key(d.trigger)) layout.dead_keys.push_back(d);
  }
  for (const auto& c : doc.compose_table) {
    layout.compose_table.emplace(c.key, c.binding);
  }
  for (const auto& p : doc.popups) {
    const bool seen = std::any_of(
        layout.popups.begin(), layout.popups.end(),
        [&](const PopupStrip& s) { return s.base_key == p.base_key; });
    if (!seen) layout.popups.push_back(p);
  }
  return layout;
}

Layout load_layout(std::string_view json_text) {
  const LayoutDocument doc = parse_layout_document(json_text);
  const auto issues = check_document(doc);
  if (!issues.empty()) throw LayoutError(issues.front());
  return build_unchecked(doc);
}

Layout load_layout_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LayoutError({LayoutErrorKind::parse, path.string(),
                       "cannot open file"});
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_layout(buffer.str());
}

std::string serialize_layout(const Layout& layout) {
  json root = json::object();
  root["name"] = layout.name;
  root["platform"] = std::string(to_string(layout.platform));

  json direct = json::array();
  for (const auto& [chord, binding] : layout.direct) {
    json e = {{"key", chord.key.name()},
              {"modifiers", modifiers_json(chord.modifiers)},
              {"output", to_hex(binding.output)}};
    if (binding.extension) e["extension"] = true;
    direct.push_back(std::move(e));
  }
  root["direct"] = std::move(direct);

  json dead = json::array();
  for (const auto& d : layout.dead_keys) {
    dead.push_back({{"key", d.trigger.key.name()},
                    {"modifiers", modifiers_json(d.trigger.modifiers)},
                    {"accent", std::string(unicode::to_string(d.accent))},
                    {"standalone", to_hex(d.standalone)}});
  }
  root["deadKeys"] = std::move(dead);

  json compose = json::array();
  for (const auto& [key, binding] : layout.compose_table) {
    json e = {{"accent", std::string(unicode::to_string(key.accent))},
              {"key", key.chord.key.name()},
              {"modifiers", modifiers_json(key.chord.modifiers)},
              {"output", to_hex(binding.output)}};
    if (binding.extension) e["extension"] = true;
    compose.push_back(std::move(e));
  }
  root["composeTable"] = std::move(compose);

  json popups = json::array();
  for (const auto& strip : layout.popups) {
    json entries = json::array();
    for (const auto& seq : strip.entries) entries.push_back(to_hex(seq));
    json e = {{"baseKey", strip.base_key.name()}, {"entries", std::move(entries)}};
    if (strip.provisional) e["provisional"] = true;
    popups.push_back(std::move(e));
  }
  root["popups"] = std::move(popups);

  return dump_one_entry_per_line(root);
}

const PopupStrip* popup_lookup(const Layout& layout, const KeyId& base_key) {
  if (layout.platform != Platform::mobile) {
    throw PlatformError(
        fmt::format("layout '{}' is not a mobile layout", layout.name));
  }
  for (const auto& strip : layout.popups) {
    if (strip.base_key == base_key) return &strip;
  }
  return nullptr;
}

}  // namespace idu::layout
