// Writes the shipped data files from the in-code definitions:
//   <out>/inventory.json
//   <out>/layouts/idu-desktop.json, <out>/layouts/idu-mobile.json
//   <out>/golden/forms/{desktop,mobile}/NN-<label>.replay
//
// The test suite fails when the checked-in files drift from this output.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "idu/idu_layouts.hpp"
#include "idu/toolchain.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
}

std::string slug(const std::string& label) {
  std::string out;
  for (char c : label) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c))
                      ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                      : '-');
  }
  return out;
}

void write_form_scripts(const fs::path& dir, const idu::layout::Layout& layout,
                        const std::vector<idu::unicode::CharacterForm>& forms) {
  const auto reach = idu::tools::reachable_outputs(layout, idu::tools::kMaxChordDepth);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& form = forms[i];
    const auto it = reach.find(form.sequence);
    if (it == reach.end()) {
      throw std::runtime_error(fmt::format("{} unreachable on {}", form.label,
                                           layout.name));
    }
    std::string script = fmt::format("# {} {}\n", form.label,
                                     idu::tools::glyph_and_hex(form.sequence));
    for (const auto& token : it->second.tokens) script += token + "\n";
    script += fmt::format("#expect \"{}\"\n", idu::to_hex(form.sequence));
    script += "BKSP\n#expect \"\"\n";
    write(dir / fmt::format("{:02}-{}.replay", i + 1, slug(form.label)), script);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: idu-gen-data <data-dir>\n";
    return 2;
  }
  const fs::path out = argv[1];
  const auto forms = idu::data::inventory();
  const auto desktop = idu::data::desktop_layout();
  const auto mobile = idu::data::mobile_layout();

  write(out / "inventory.json", idu::data::serialize_inventory(forms));
  write(out / "layouts" / "idu-desktop.json", idu::layout::serialize_layout(desktop));
  write(out / "layouts" / "idu-mobile.json", idu::layout::serialize_layout(mobile));
  write_form_scripts(out / "golden" / "forms" / "desktop", desktop, forms);
  write_form_scripts(out / "golden" / "forms" / "mobile", mobile, forms);
  return 0;
}
