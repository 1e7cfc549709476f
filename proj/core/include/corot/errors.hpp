#pragma once

#include <stdexcept>
#include <string>

namespace corot {

/// Input outside the domain of an operation (non-SPD tensor, singular F, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A spin function evaluated where it has no continuous extension
/// (Gurtin-Spear at coincident stretches).
class DiscontinuityError : public std::domain_error {
 public:
  explicit DiscontinuityError(const std::string& what) : std::domain_error(what) {}
};

/// Two independent evaluation routes disagreed beyond tolerance.
class RouteDisagreement : public std::logic_error {
 public:
  explicit RouteDisagreement(const std::string& what) : std::logic_error(what) {}
};

}  // namespace corot
