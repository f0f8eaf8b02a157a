#pragma once

#include <stdexcept>
#include <string>

namespace qperc {

// Invalid arguments, malformed input, out-of-range queries.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would blow a resource guard
// (vertex count, enumeration size, work budget).  Callers that want to
// proceed anyway must raise the corresponding limit explicitly.
class guard_error : public error {
 public:
  using error::error;
};

}  // namespace qperc
