#pragma once

#include <stdexcept>
#include <string>

namespace eventree {

// Caller handed us something the contract rejects (bad ids, wrong shape,
// infeasible parameters). Maps to CLI exit code 3.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// An internal guarantee failed. These are bugs, never expected outcomes,
// and are surfaced with as much state as practical. Maps to CLI exit code 4.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eventree
