#include "idu/embedding.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace idu::embed {
namespace {

using json = nlohmann::ordered_json;

class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

json error_response(const json& id, std::string_view kind,
                    std::string_view message) {
  json out = json::object();
  if (!id.is_null()) out["id"] = id;
  out["ok"] = false;
  out["error"] = {{"kind", kind}, {"message", message}};
  return out;
}

const json& field(const json& request, const char* name) {
  if (!request.contains(name)) {
    throw ProtocolError("protocol", fmt::format("missing field '{}'", name));
  }
  return request[name];
}

std::string string_field(const json& request, const char* name) {
  const auto& v = field(request, name);
  if (!v.is_string()) {
    throw ProtocolError("protocol", fmt::format("field '{}' must be a string", name));
  }
  return v.get<std::string>();
}

json command_json(const engine::EditCommand& command) {
  struct Visitor {
    json operator()(const engine::PassThrough&) const {
      return {{"kind", "passThrough"}};
    }
    json operator()(const engine::Suppress&) const {
      return {{"kind", "suppress"}};
    }
    json operator()(const engine::Commit& c) const {
      return {{"kind", "commit"}, {"text", to_hex(c.text)}};
    }
    json operator()(const engine::DeleteBackward& d) const {
      return {{"kind", "deleteBackward"},
              {"count", d.count},
              {"unit", std::string(engine::to_string(d.unit))}};
    }
  };
  return std::visit(Visitor{}, command);
}

json step_response(const json& id, const engine::Step& step) {
  json out = json::object();
  if (!id.is_null()) out["id"] = id;
  out["ok"] = true;
  json commands = json::array();
  for (const auto& c : step.commands) commands.push_back(command_json(c));
  out["commands"] = std::move(commands);
  out["pending"] = step.state.pending
                       ? json(std::string(unicode::to_string(*step.state.pending)))
                       : json(nullptr);
  return out;
}

}  // namespace

std::string EngineHost::handle(std::string_view request_text) {
  json id;
  try {
    json request;
    try {
      request = json::parse(request_text);
    } catch (const json::parse_error& e) {
      throw ProtocolError("parse", e.what());
    }
    if (!request.is_object()) {
      throw ProtocolError("protocol", "request must be a JSON object");
    }
    if (request.contains("id")) id = request["id"];
    const std::string op = string_field(request, "op");
    if (op != "loadLayout" && op != "processKey" && op != "selectPopup") {
      throw ProtocolError("protocol", fmt::format("unknown op '{}'", op));
    }

    if (op == "loadLayout") {
      const auto& doc = field(request, "layout");
      auto unit = engine::BackspaceUnit::grapheme;
      if (request.contains("backspaceUnit")) {
        const auto parsed =
            engine::parse_backspace_unit(string_field(request, "backspaceUnit"));
        if (!parsed) {
          throw ProtocolError("protocol",
                              "backspaceUnit must be grapheme or codepoint");
        }
        unit = *parsed;
      }
      layout::Layout loaded;
      try {
        loaded = layout::load_layout(doc.is_string() ? doc.get<std::string>()
                                                     : doc.dump());
      } catch (const layout::LayoutError& e) {
        throw ProtocolError("layout", e.what());
      }
      state_ = engine::initial_state(
          std::make_shared<const layout::Layout>(std::move(loaded)), unit);
      json out = json::object();
      if (!id.is_null()) out["id"] = id;
      out["ok"] = true;
      out["name"] = state_.layout->name;
      out["platform"] = std::string(layout::to_string(state_.layout->platform));
      out["backspaceUnit"] = std::string(engine::to_string(unit));
      return out.dump();
    }

    if (!state_.layout) {
      throw ProtocolError("noLayout", "no layout loaded");
    }

    if (op == "processKey") {
      const std::string key_text = string_field(request, "key");
      const auto key = layout::KeyId::parse(key_text);
      if (!key) {
        throw ProtocolError("protocol", fmt::format("unknown key '{}'", key_text));
      }
      layout::ModifierSet mods;
      if (request.contains("modifiers")) {
        const auto& list = request["modifiers"];
        if (!list.is_array()) {
          throw ProtocolError("protocol", "modifiers must be an array");
        }
        for (const auto& m : list) {
          const auto mod = m.is_string() ? layout::parse_modifier(m.get<std::string>())
                                         : std::nullopt;
          if (!mod) {
            throw ProtocolError("protocol", fmt::format("unknown modifier {}", m.dump()));
          }
          mods = mods.with(*mod);
        }
      }
      auto direction = engine::Direction::press;
      if (request.contains("direction")) {
        const std::string d = string_field(request, "direction");
        if (d == "release") {
          direction = engine::Direction::release;
        } else if (d != "press") {
          throw ProtocolError("protocol", "direction must be press or release");
        }
      }
      const auto step =
          engine::process(state_, {layout::Chord{*key, mods}, direction});
      state_ = step.state;
      return step_response(id, step).dump();
    }

    if (op == "selectPopup") {
      const std::string key_text = string_field(request, "baseKey");
      const auto key = layout::KeyId::parse(key_text);
      if (!key) {
        throw ProtocolError("protocol", fmt::format("unknown key '{}'", key_text));
      }
      const auto& index = field(request, "index");
      if (!index.is_number_unsigned() && !index.is_number_integer()) {
        throw ProtocolError("protocol", "index must be an integer");
      }
      if (index.is_number_integer() && index.get<long long>() < 0) {
        throw ProtocolError("indexOutOfRange", "index must not be negative");
      }
      try {
        const auto step =
            engine::select_popup(state_, *key, index.get<std::size_t>());
        state_ = step.state;
        return step_response(id, step).dump();
      } catch (const layout::PlatformError& e) {
        throw ProtocolError("platform", e.what());
      } catch (const engine::NoStripError& e) {
        throw ProtocolError("noStrip", e.what());
      } catch (const engine::PopupIndexError& e) {
        throw ProtocolError("indexOutOfRange", e.what());
      }
    }

    throw ProtocolError("protocol", fmt::format("unknown op '{}'", op));
  } catch (const ProtocolError& e) {
    return error_response(id, e.kind(), e.what()).dump();
  }
}

}  // namespace idu::embed
