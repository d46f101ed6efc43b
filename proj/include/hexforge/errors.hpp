#pragma once

#include <stdexcept>
#include <string>

namespace hexforge {

// Raised when a supercritical-pipeline precondition fails on the given input
// (for example no crossing exists). CLI maps this to exit code 2.
struct NotApplicableError : std::runtime_error {
  explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a runtime validity assertion fires. These assertions
// operationalize structural guarantees of the identification algorithm and
// should never trigger; the CLI maps them to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require_internal(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace hexforge
