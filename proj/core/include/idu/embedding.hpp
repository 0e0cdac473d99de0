#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "idu/engine.hpp"

namespace idu::embed {

// Message host for out-of-process front ends. Each request and response is
// one JSON object; the README describes the schema.
//
//   {"op": "loadLayout", "layout": {...}, "backspaceUnit": "grapheme"}
//   {"op": "processKey", "key": "e", "modifiers": ["altgr"], "direction": "press"}
//   {"op": "selectPopup", "baseKey": "e", "index": 0}
//
// Responses carry "ok"; successful key/popup responses list the edit
// commands and the pending accent (or null).
class EngineHost {
 public:
  std::string handle(std::string_view request);

  bool has_layout() const { return state_.layout != nullptr; }
  const engine::EngineState& state() const { return state_; }

 private:
  engine::EngineState state_;
};

}  // namespace idu::embed
