#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spl {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph or power parameter is outside its valid range.
class parameter_error : public error {
 public:
  using error::error;
};

/// A vertex or variable index is outside 1..n.
class index_error : public error {
 public:
  using error::error;
};

/// An exponent sum does not fit in the exponent type.
class overflow_error : public error {
 public:
  using error::error;
};

/// The zero ideal has no least generating degree.
class zero_ideal_error : public error {
 public:
  using error::error;
};

/// An operation that requires an unmixed graph got a mixed one.
class not_unmixed_error : public error {
 public:
  using error::error;
};

/// A computation would exceed a configured budget. Carries the quantity that
/// tripped and the limit so callers can report it in structured form.
class scale_limit_error : public error {
 public:
  scale_limit_error(std::string what_budget, std::size_t projected, std::size_t limit)
      : error("scale limit exceeded: " + what_budget + " projected " + std::to_string(projected) +
              " > budget " + std::to_string(limit)),
        budget_(std::move(what_budget)),
        projected_(projected),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  std::size_t projected() const noexcept { return projected_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::size_t projected_;
  std::size_t limit_;
};

}  // namespace spl
