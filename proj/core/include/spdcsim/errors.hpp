#pragma once

#include <stdexcept>
#include <string>

namespace spdcsim {

// Input outside a model's validity region (e.g. wavelength outside a
// Sellmeier window, finite-difference step straddling a band edge).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Caller broke an interface contract (bad argument combination, wrong pump
// kind, unnormalized grid, ...). Distinct from DomainError so the CLI can
// report both as validation failures with field-level context.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A solver failed to find a solution that the physics may legitimately not
// have (no phase matching, no root in bracket, singular resolution).
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spdcsim
