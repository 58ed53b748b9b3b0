#pragma once

#include <stdexcept>
#include <string>

namespace flagorbits {

/// Raised when a descriptor turns out to describe a closed double coset
/// (every gamma lies in w·Delta_Theta), so the boundary constructions do
/// not apply.
struct NotNonClosedError : std::runtime_error {
  explicit NotNonClosedError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised by numeric classifiers when a quantity falls inside the ambiguity
/// band between "zero" and "clearly nonzero".
struct DegenerateError : std::runtime_error {
  explicit DegenerateError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when a separation certificate comes out non-positive. This never
/// happens on valid inputs; it flags an implementation bug.
struct CertificateFailure : std::runtime_error {
  explicit CertificateFailure(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when a witness search exhausts its budget without success.
struct NotFoundError : std::runtime_error {
  explicit NotFoundError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace flagorbits
