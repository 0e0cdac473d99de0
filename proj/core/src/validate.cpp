#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "idu/toolchain.hpp"

namespace idu::tools {
namespace {

std::set<layout::Chord> chord_alphabet(const layout::Layout& layout) {
  std::set<layout::Chord> chords;
  for (const auto& [chord, binding] : layout.direct) chords.insert(chord);
  for (const auto& dead : layout.dead_keys) chords.insert(dead.trigger);
  for (const auto& [key, binding] : layout.compose_table) {
    chords.insert(key.chord);
  }
  chords.insert({layout::KeyId::from_known("space"), {}});
  return chords;
}

void record(std::map<CodepointSeq, Reach>& out, const CodepointSeq& seq,
            const Reach& reach) {
  auto it = out.find(seq);
  if (it == out.end() || reach.cost < it->second.cost) out[seq] = reach;
}

}  // namespace

std::map<CodepointSeq, Reach> reachable_outputs(const layout::Layout& layout,
                                                int max_chords) {
  std::map<CodepointSeq, Reach> out;
  const auto shared = std::make_shared<const layout::Layout>(layout);
  const auto alphabet = chord_alphabet(layout);

  // Engine states differ only in the pending accent, so breadth-first search
  // over pending values visits each state once at its minimal depth.
  using Pending = std::optional<unicode::Accent>;
  std::map<Pending, std::vector<std::string>> visited;
  std::vector<Pending> frontier{std::nullopt};
  visited[std::nullopt] = {};

  for (int depth = 0; depth < max_chords && !frontier.empty(); ++depth) {
    std::vector<Pending> next;
    for (const Pending& pending : frontier) {
      engine::EngineState state{shared, pending,
                                engine::BackspaceUnit::grapheme};
      for (const auto& chord : alphabet) {
        const auto step = engine::process(state, {chord, engine::Direction::press});
        auto path = visited[pending];
        path.push_back(layout::to_token(chord));
        for (const auto& command : step.commands) {
          if (const auto* commit = std::get_if<engine::Commit>(&command)) {
            record(out, commit->text, {depth + 1, path});
          }
        }
        if (!visited.contains(step.state.pending)) {
          visited[step.state.pending] = path;
          next.push_back(step.state.pending);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& strip : layout.popups) {
    for (std::size_t i = 0; i < strip.entries.size(); ++i) {
      record(out, strip.entries[i],
             {1, {fmt::format("POPUP {} {}", strip.base_key.name(), i)}});
    }
  }
  return out;
}

ValidationReport validate(const layout::LayoutDocument& doc,
                          const std::vector<CharacterForm>& inventory,
                          int max_chords) {
  ValidationReport report;
  report.layout_name = doc.name;
  report.platform = doc.platform;
  report.inventory_size = inventory.size();

  for (const auto& issue : layout::check_document(doc)) {
    std::string line = fmt::format("{}: {}", issue.entry, issue.detail);
    if (issue.kind == layout::LayoutErrorKind::non_canonical_sequence) {
      report.ordering_violations.push_back(std::move(line));
    } else {
      report.conflicts.push_back(
          fmt::format("{}: {}", layout::to_string(issue.kind), line));
    }
  }
  std::sort(report.conflicts.begin(), report.conflicts.end());
  std::sort(report.ordering_violations.begin(),
            report.ordering_violations.end());

  const auto reach = reachable_outputs(layout::build_unchecked(doc), max_chords);
  for (const auto& form : inventory) {
    if (const auto it = reach.find(form.sequence); it != reach.end()) {
      report.cost[form.sequence] = it->second.cost;
    } else {
      report.missing.push_back(form);
    }
  }
  std::sort(report.missing.begin(), report.missing.end(),
            [](const CharacterForm& a, const CharacterForm& b) {
              return a.sequence < b.sequence;
            });
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::string out;
  out += fmt::format("layout: {} ({})\n", report.layout_name,
                     layout::to_string(report.platform));
  out += fmt::format("inventory: {} forms, {} reachable\n",
                     report.inventory_size, report.cost.size());
  out += fmt::format("missing: {}\n", report.missing.size());
  for (const auto& form : report.missing) {
    out += fmt::format("  {}  {}\n", glyph_and_hex(form.sequence), form.label);
  }
  out += fmt::format("conflicts: {}\n", report.conflicts.size());
  for (const auto& c : report.conflicts) out += fmt::format("  {}\n", c);
  out += fmt::format("ordering violations: {}\n",
                     report.ordering_violations.size());
  for (const auto& v : report.ordering_violations) {
    out += fmt::format("  {}\n", v);
  }
  out += "cost:\n";
  for (const auto& [seq, cost] : report.cost) {
    out += fmt::format("  {}  {}\n", glyph_and_hex(seq), cost);
  }
  out += fmt::format("result: {}\n", report.ok() ? "OK" : "FAIL");
  return out;
}

}  // namespace idu::tools
