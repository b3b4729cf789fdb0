#pragma once

#include "cutpaste/error.hpp"

#include <optional>
#include <string>

namespace testing {

// Kind of the cutpaste::Error thrown by f, or nullopt if nothing was thrown.
template <typename F>
std::optional<cutpaste::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const cutpaste::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

template <typename F>
std::string error_message(F&& f) {
  try {
    f();
  } catch (const cutpaste::Error& e) {
    return e.what();
  }
  return {};
}

inline std::string source_path(const std::string& relative) { return std::string(CUTPASTE_SOURCE_DIR) + "/" + relative; }

}  // namespace testing
