#include "idu/unicode_core.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include <fmt/format.h>

#include "unicode_tables.hpp"

namespace idu::unicode {
namespace {

const detail::CodepointRecord* find_record(Codepoint cp) {
  const auto records = detail::codepoint_records();
  auto it = std::lower_bound(
      records.begin(), records.end(), cp,
      [](const detail::CodepointRecord& r, Codepoint v) {
        return r.codepoint < v;
      });
  if (it == records.end() || it->codepoint != cp) return nullptr;
  return &*it;
}

const detail::DecompositionRecord* find_decomposition(Codepoint cp) {
  const auto records = detail::decomposition_records();
  auto it = std::lower_bound(
      records.begin(), records.end(), cp,
      [](const detail::DecompositionRecord& r, Codepoint v) {
        return r.composed < v;
      });
  if (it == records.end() || it->composed != cp) return nullptr;
  return &*it;
}

bool is_accent_mark(Codepoint cp) { return accent_for_mark(cp).has_value(); }

bool is_vowel(Codepoint cp) {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'A': case U'E': case U'I': case U'O': case U'U':
      return true;
    default:
      return false;
  }
}

bool is_schwa(Codepoint cp) { return cp == kSchwa || cp == kCapitalSchwa; }

std::vector<Precomposition> build_precompositions() {
  std::vector<Precomposition> table;
  for (const auto& r : detail::decomposition_records()) {
    if (is_vowel(r.base) && is_accent_mark(r.mark)) {
      table.push_back({r.base, r.mark, r.composed});
    }
  }
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return std::tie(a.base, a.accent) < std::tie(b.base, b.accent);
  });
  return table;
}

void decompose_into(Codepoint cp, CodepointSeq& out) {
  if (const auto* d = find_decomposition(cp)) {
    decompose_into(d->base, out);
    decompose_into(d->mark, out);
    return;
  }
  if (!is_supported(cp)) throw UnsupportedCodepoint(cp);
  out.push_back(cp);
}

}  // namespace

Codepoint combining_mark(Accent accent) {
  switch (accent) {
    case Accent::grave: return kCombiningGrave;
    case Accent::acute: return kCombiningAcute;
    case Accent::nasal: return kCombiningTilde;
    case Accent::macron: return kCombiningMacron;
  }
  return kCombiningGrave;
}

std::optional<Accent> accent_for_mark(Codepoint mark) {
  switch (mark) {
    case kCombiningGrave: return Accent::grave;
    case kCombiningAcute: return Accent::acute;
    case kCombiningTilde: return Accent::nasal;
    case kCombiningMacron: return Accent::macron;
    default: return std::nullopt;
  }
}

Codepoint spacing_form(Accent accent) {
  switch (accent) {
    case Accent::grave: return 0x0060;
    case Accent::acute: return 0x00B4;
    case Accent::nasal: return 0x007E;
    case Accent::macron: return 0x00AF;
  }
  return 0x0060;
}

std::string_view to_string(Accent accent) {
  switch (accent) {
    case Accent::grave: return "grave";
    case Accent::acute: return "acute";
    case Accent::nasal: return "nasal";
    case Accent::macron: return "macron";
  }
  return "grave";
}

std::optional<Accent> parse_accent(std::string_view name) {
  for (Accent a : kAllAccents) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

namespace {
constexpr std::array<std::pair<Category, std::string_view>, 10> kCategoryNames{{
    {Category::schwa, "schwa"},
    {Category::retracted, "retracted"},
    {Category::grave, "grave"},
    {Category::acute, "acute"},
    {Category::nasalized, "nasalized"},
    {Category::macron, "macron"},
    {Category::accented_schwa, "accented-schwa"},
    {Category::accented_retracted_schwa, "accented-retracted-schwa"},
    {Category::accented_retracted_o, "accented-retracted-o"},
    {Category::accented_retracted_u, "accented-retracted-u"},
}};
}  // namespace

std::string_view to_string(Category category) {
  for (const auto& [c, n] : kCategoryNames) {
    if (c == category) return n;
  }
  return "schwa";
}

std::optional<Category> parse_category(std::string_view name) {
  for (const auto& [c, n] : kCategoryNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(LetterCase letter_case) {
  return letter_case == LetterCase::lower ? "lower" : "upper";
}

std::optional<LetterCase> parse_letter_case(std::string_view name) {
  if (name == "lower") return LetterCase::lower;
  if (name == "upper") return LetterCase::upper;
  return std::nullopt;
}

UnsupportedCodepoint::UnsupportedCodepoint(Codepoint cp)
    : std::runtime_error(
          fmt::format("unsupported codepoint U+{}", to_hex(cp))),
      codepoint_(cp) {}

NoComposition::NoComposition(Codepoint base, Codepoint accent)
    : std::runtime_error(fmt::format("no composition for U+{} + U+{}",
                                     to_hex(base), to_hex(accent))) {}

bool is_supported(Codepoint cp) { return find_record(cp) != nullptr; }

int ccc(Codepoint cp) {
  if (const auto* r = find_record(cp)) return r->ccc;
  throw UnsupportedCodepoint(cp);
}

std::optional<int> try_ccc(Codepoint cp) {
  if (const auto* r = find_record(cp)) return r->ccc;
  return std::nullopt;
}

int ccc_or_starter(Codepoint cp) noexcept {
  const auto* r = find_record(cp);
  return r ? r->ccc : 0;
}

std::string_view name(Codepoint cp) {
  const auto* r = find_record(cp);
  return r ? std::string_view(r->name) : std::string_view();
}

RepairResult repair_order_counted(std::u32string_view text) {
  RepairResult result{CodepointSeq(text), 0};
  auto& out = result.text;
  const auto by_ccc = [](Codepoint a, Codepoint b) {
    return ccc_or_starter(a) < ccc_or_starter(b);
  };
  std::size_t i = 0;
  while (i < out.size()) {
    if (ccc_or_starter(out[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < out.size() && ccc_or_starter(out[end]) != 0) ++end;
    const auto first = out.begin() + static_cast<std::ptrdiff_t>(i);
    const auto last = out.begin() + static_cast<std::ptrdiff_t>(end);
    if (!std::is_sorted(first, last, by_ccc)) {
      std::stable_sort(first, last, by_ccc);
      ++result.reordered_runs;
    }
    i = end;
  }
  return result;
}

CodepointSeq repair_order(std::u32string_view text) {
  return repair_order_counted(text).text;
}

bool is_canonical(std::u32string_view text) {
  int previous = 0;
  for (Codepoint cp : text) {
    const int c = ccc_or_starter(cp);
    if (c != 0 && c < previous) return false;
    previous = c;
  }
  return true;
}

std::span<const Precomposition> precomposition_table() {
  static const std::vector<Precomposition> table = build_precompositions();
  return table;
}

std::optional<Codepoint> precomposed(Codepoint base, Codepoint accent) {
  const auto table = precomposition_table();
  auto it = std::lower_bound(
      table.begin(), table.end(), std::pair{base, accent},
      [](const Precomposition& p, const std::pair<Codepoint, Codepoint>& key) {
        return std::pair{p.base, p.accent} < key;
      });
  if (it == table.end() || it->base != base || it->accent != accent) {
    return std::nullopt;
  }
  return it->composed;
}

CharacterForm compose(Codepoint base, Codepoint accent) {
  const auto accent_id = accent_for_mark(accent);
  if (!accent_id || !(is_vowel(base) || is_schwa(base))) {
    throw NoComposition(base, accent);
  }
  CharacterForm form;
  form.letter_case = (base == kCapitalSchwa || (base >= U'A' && base <= U'Z'))
                         ? LetterCase::upper
                         : LetterCase::lower;
  if (is_schwa(base)) {
    form.sequence = {base, accent};
    form.category = Category::accented_schwa;
    form.label = fmt::format("{} with {}",
                             base == kSchwa ? "schwa" : "capital schwa",
                             to_string(*accent_id));
    return form;
  }
  const auto composed = precomposed(base, accent);
  if (!composed) throw NoComposition(base, accent);
  form.sequence = {*composed};
  switch (*accent_id) {
    case Accent::grave: form.category = Category::grave; break;
    case Accent::acute: form.category = Category::acute; break;
    case Accent::nasal: form.category = Category::nasalized; break;
    case Accent::macron: form.category = Category::macron; break;
  }
  form.label = fmt::format("{} with {}", static_cast<char>(base),
                           to_string(*accent_id));
  return form;
}

CodepointSeq decompose(std::u32string_view text) {
  CodepointSeq out;
  out.reserve(text.size() * 2);
  for (Codepoint cp : text) decompose_into(cp, out);
  return repair_order(out);
}

std::vector<CodepointSeq> grapheme_split(std::u32string_view text) {
  std::vector<CodepointSeq> clusters;
  for (Codepoint cp : text) {
    if (clusters.empty() || ccc_or_starter(cp) == 0) clusters.emplace_back();
    clusters.back().push_back(cp);
  }
  return clusters;
}

std::size_t last_cluster_length(std::u32string_view text) {
  std::size_t n = text.size();
  while (n > 0) {
    --n;
    if (ccc_or_starter(text[n]) == 0) return text.size() - n;
  }
  return text.size();
}

}  // namespace idu::unicode
