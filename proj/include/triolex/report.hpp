#pragma once

#include <string>

#include "json.hpp"

namespace triolex {

struct Report {
  bool valid = true;
  std::string check;
  nlohmann::json witness;
  std::string message;

  static Report ok() { return Report{}; }
  static Report fail(std::string check, nlohmann::json witness, std::string message = {}) {
    return Report{false, std::move(check), std::move(witness), std::move(message)};
  }

  explicit operator bool() const { return valid; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["valid"] = valid;
    j["witness"] = valid ? nlohmann::json(nullptr) : witness;
    if (!valid) {
      j["check"] = check;
      if (!message.empty()) j["message"] = message;
    }
    return j;
  }
};

}  // namespace triolex
