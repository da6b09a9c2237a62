#pragma once

#include <stdexcept>
#include <string>

namespace wofc {

// Malformed input or violated precondition (bad facets, unknown vertices, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive operation refused to run because the instance exceeds its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void refuse_cap(const std::string& op, long size, long cap) {
  throw CapExceeded(op + ": instance size " + std::to_string(size) +
                    " exceeds cap " + std::to_string(cap));
}

}  // namespace wofc
