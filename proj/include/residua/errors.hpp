#pragma once

#include <stdexcept>
#include <string>

namespace residua {

/// Input violates a precondition (wrong residue class, out of supported
/// range, non-prime modulus, ...). CLI maps this to exit code 1.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// An internal cross-check failed that the mathematics guarantees must
/// hold; indicates an implementation bug. CLI maps this to exit code 2.
class integrity_error : public std::runtime_error {
  public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace residua
