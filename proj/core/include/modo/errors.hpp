#pragma once

#include <stdexcept>
#include <string>

namespace modo {

// Arithmetic on objective vectors left the signed 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Two objective vectors (or an instance payload) disagree on a dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance, model, or path.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ResourceKind { kNodes, kLabels, kTime, kMemory, kEnumeration };

// A configured budget (node count, label count, wall clock, memory) ran out.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(ResourceKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ResourceKind kind() const noexcept { return kind_; }

 private:
  ResourceKind kind_;
};

}  // namespace modo
