#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

// Bad argument: n < 3, mismatched group orders, out-of-range selectors.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Value outside the domain of an operation (e.g. line_sum of a non semi-magic matrix).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration would exceed its tuple budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_group_order(int n) {
  if (n < 3) throw ParameterError("group parameter n must be >= 3, got " + std::to_string(n));
}

}  // namespace dihedral
