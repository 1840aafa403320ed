#ifndef METAP_ERRORS_HPP
#define METAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metap {

// Bad inputs: unknown names, malformed specs, incompatible parameters.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Evaluation outside a descriptor's domain.
struct DomainError : ValidationError {
  explicit DomainError(const std::string& m) : ValidationError(m) {}
};

// Operation applied to a descriptor of the wrong kind.
struct KindError : ValidationError {
  explicit KindError(const std::string& m) : ValidationError(m) {}
};

// File system failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace metap

#endif
