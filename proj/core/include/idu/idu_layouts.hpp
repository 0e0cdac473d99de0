#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idu/layout.hpp"
#include "idu/unicode_core.hpp"

namespace idu::data {

using unicode::CharacterForm;

// The 44 characters of the Idu Azobra orthography that need keyboard
// support, in published table order: 40 lowercase plus Ə, Ə̱, O̱, U̱.
std::vector<CharacterForm> inventory();

// AltGr direct mappings plus four AltGr dead keys.
layout::Layout desktop_layout();
// QWERTY with long-press strips on a, e, i, o, u.
layout::Layout mobile_layout();

class InventoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inventory file: {"name": ..., "forms": [{"label", "category", "case",
// "sequence"}]}, sequences as space-separated uppercase hex.
std::vector<CharacterForm> parse_inventory(std::string_view json_text);
std::vector<CharacterForm> load_inventory_file(const std::filesystem::path& path);
std::string serialize_inventory(const std::vector<CharacterForm>& forms);

}  // namespace idu::data
