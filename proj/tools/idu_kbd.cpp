// idu-kbd: layout validation, keystroke replay, text repair and codepoint
// inspection for the Idu Azobra input method.
//
// Exit codes: 0 success, 1 findings or failed expectations, 2 usage or
// parse errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "idu/codepoint.hpp"
#include "idu/embedding.hpp"
#include "idu/idu_layouts.hpp"
#include "idu/layout.hpp"
#include "idu/toolchain.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

int run_validate(const std::vector<std::string>& layouts,
                 const std::string& inventory_path, int max_chords) {
  std::vector<idu::unicode::CharacterForm> inventory;
  try {
    inventory = idu::data::load_inventory_file(inventory_path);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}: {}\n", inventory_path, e.what());
    return kExitUsage;
  }
  int status = kExitOk;
  for (const auto& path : layouts) {
    idu::layout::LayoutDocument doc;
    try {
      doc = idu::layout::parse_layout_document(read_file(path));
    } catch (const std::exception& e) {
      fmt::print(stderr, "error: {}: {}\n", path, e.what());
      return kExitUsage;
    }
    const auto report = idu::tools::validate(doc, inventory, max_chords);
    fmt::print("{}", idu::tools::format_report(report));
    if (!report.ok()) status = kExitFindings;
  }
  return status;
}

int run_replay(const std::string& layout_path,
               const std::vector<std::string>& scripts,
               const std::string& unit_name) {
  const auto unit = idu::engine::parse_backspace_unit(unit_name);
  if (!unit) {
    fmt::print(stderr, "error: --backspace-unit must be grapheme or codepoint\n");
    return kExitUsage;
  }
  std::shared_ptr<const idu::layout::Layout> layout;
  try {
    layout = std::make_shared<const idu::layout::Layout>(
        idu::layout::load_layout(read_file(layout_path)));
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}: {}\n", layout_path, e.what());
    return kExitUsage;
  }

  int status = kExitOk;
  for (const auto& path : scripts) {
    try {
      const auto script = idu::tools::parse_replay_script(read_file(path));
      const auto result = idu::tools::run_replay(layout, script, *unit);
      for (const auto& e : result.expectations) {
        fmt::print("{}:{}: {} {}\n", path, e.line, e.passed ? "PASS" : "FAIL",
                   idu::tools::glyph_and_hex(e.expected));
      }
      if (!result.passed) {
        fmt::print("{}", result.diff);
        status = kExitFindings;
      }
      fmt::print("{}: document {}\n", path,
                 idu::tools::glyph_and_hex(result.document));
    } catch (const idu::tools::ReplayError& e) {
      fmt::print(stderr, "error: {}:{}\n", path, e.what());
      return kExitUsage;
    } catch (const std::exception& e) {
      fmt::print(stderr, "error: {}: {}\n", path, e.what());
      return kExitUsage;
    }
  }
  return status;
}

int run_repair(const std::vector<std::string>& files, bool in_place) {
  if (in_place && files.empty()) {
    fmt::print(stderr, "error: --in-place needs at least one file\n");
    return kExitUsage;
  }
  const auto repair_one = [&](const std::string& label,
                              const std::string& bytes) -> std::optional<std::string> {
    try {
      auto outcome = idu::tools::repair_utf8(bytes);
      fmt::print(stderr, "{}: {} reordered run{}\n", label, outcome.changes,
                 outcome.changes == 1 ? "" : "s");
      return std::move(outcome.text);
    } catch (const idu::Utf8Error& e) {
      fmt::print(stderr, "error: {}: byte {}: {}\n", label, e.byte_offset(),
                 e.what());
      return std::nullopt;
    }
  };

  if (files.empty()) {
    const auto out = repair_one("<stdin>", read_stdin());
    if (!out) return kExitUsage;
    std::fwrite(out->data(), 1, out->size(), stdout);
    return kExitOk;
  }
  for (const auto& path : files) {
    std::string bytes;
    try {
      bytes = read_file(path);
    } catch (const std::exception& e) {
      fmt::print(stderr, "error: {}\n", e.what());
      return kExitUsage;
    }
    const auto out = repair_one(path, bytes);
    if (!out) return kExitUsage;
    if (in_place) {
      if (*out != bytes) {
        std::ofstream(path, std::ios::binary | std::ios::trunc) << *out;
      }
    } else {
      std::fwrite(out->data(), 1, out->size(), stdout);
    }
  }
  return kExitOk;
}

int run_inspect(const std::optional<std::string>& text, const std::string& file) {
  std::string bytes;
  if (!file.empty()) {
    try {
      bytes = read_file(file);
    } catch (const std::exception& e) {
      fmt::print(stderr, "error: {}\n", e.what());
      return kExitUsage;
    }
  } else if (text) {
    bytes = *text;
  } else {
    bytes = read_stdin();
  }
  try {
    fmt::print("{}", idu::tools::inspect(idu::decode_utf8(bytes)));
  } catch (const idu::Utf8Error& e) {
    fmt::print(stderr, "error: byte {}: {}\n", e.byte_offset(), e.what());
    return kExitUsage;
  }
  return kExitOk;
}

int run_embed(const std::string& layout_path, const std::string& unit_name) {
  idu::embed::EngineHost host;
  if (!layout_path.empty()) {
    try {
      const std::string request = fmt::format(
          R"({{"op":"loadLayout","layout":{},"backspaceUnit":"{}"}})",
          read_file(layout_path), unit_name);
      std::cout << host.handle(request) << '\n' << std::flush;
    } catch (const std::exception& e) {
      fmt::print(stderr, "error: {}\n", e.what());
      return kExitUsage;
    }
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::cout << host.handle(line) << '\n' << std::flush;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idu Azobra input-method toolchain"};
  app.require_subcommand(1);

  std::vector<std::string> layouts;
  std::string inventory;
  int max_chords = idu::tools::kMaxChordDepth;
  auto* validate = app.add_subcommand(
      "validate", "Check a layout for coverage, conflicts and ordering");
  validate->add_option("--layout", layouts, "Layout file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--inventory", inventory, "Inventory file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--max-chords", max_chords,
                       "Longest keystroke sequence explored")
      ->check(CLI::Range(1, 8));

  std::string layout_path;
  std::string unit = "grapheme";
  std::vector<std::string> scripts;
  auto* replay = app.add_subcommand("replay", "Run keystroke scripts");
  replay->add_option("--layout", layout_path, "Layout file")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--backspace-unit", unit, "grapheme or codepoint")
      ->check(CLI::IsMember({"grapheme", "codepoint"}));
  replay->add_option("scripts", scripts, "Replay script files")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> repair_files;
  bool in_place = false;
  auto* repair = app.add_subcommand(
      "repair", "Put combining marks into canonical order");
  repair->add_option("files", repair_files, "Files (stdin when omitted)")
      ->check(CLI::ExistingFile);
  repair->add_flag("--in-place", in_place, "Rewrite files instead of printing");

  std::optional<std::string> inspect_text;
  std::string inspect_file;
  auto* inspect = app.add_subcommand("inspect", "List codepoints and clusters");
  inspect->add_option("text", inspect_text, "Text (stdin when omitted)");
  inspect->add_option("--file", inspect_file, "Read text from a file")
      ->check(CLI::ExistingFile);

  std::string embed_layout;
  std::string embed_unit = "grapheme";
  auto* embed = app.add_subcommand(
      "embed", "Serve the engine message protocol over stdin/stdout");
  embed->add_option("--layout", embed_layout, "Layout to load at start")
      ->check(CLI::ExistingFile);
  embed->add_option("--backspace-unit", embed_unit, "grapheme or codepoint")
      ->check(CLI::IsMember({"grapheme", "codepoint"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*validate) return run_validate(layouts, inventory, max_chords);
  if (*replay) return run_replay(layout_path, scripts, unit);
  if (*repair) return run_repair(repair_files, in_place);
  if (*inspect) return run_inspect(inspect_text, inspect_file);
  if (*embed) return run_embed(embed_layout, embed_unit);
  return kExitUsage;
}
