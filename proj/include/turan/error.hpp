#pragma once

#include <stdexcept>

namespace turan {

/// Well-formed input that admits no answer (no admissible graphs, a type that
/// is itself forbidden, ...). Malformed input raises std::invalid_argument.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turan
