#pragma once

#include <stdexcept>
#include <string>

namespace physkit {

// Raised when a physical quantity is undefined at the requested point
// (singular fields, coincident bodies, satellite at the origin).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a caller violates a documented precondition or shape contract.
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace physkit
