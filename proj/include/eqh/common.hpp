#pragma once

#include <stdexcept>
#include <string>

namespace eqh {

// Construction-time invariant violation: bad tables, broken actions,
// containment failures, and similar.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input: unreadable files, JSON schema problems.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested build exceeds the configured dense-size limits.
struct SizeCapError : std::runtime_error {
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqh
