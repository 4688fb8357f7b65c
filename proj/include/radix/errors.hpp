#pragma once

#include <stdexcept>
#include <string>

namespace radix {

// Thrown when an nth root is requested on a (possibly) negative radicand.
// Radicands are nonnegative on the supported domain, so this signals a
// caller error rather than a request for complex branches.
class negative_radicand_error : public std::domain_error {
 public:
  explicit negative_radicand_error(const std::string& what)
      : std::domain_error(what) {}
};

// Truncation depth below 1.
class depth_error : public std::invalid_argument {
 public:
  explicit depth_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// The degree equation order*d = d + (order-1) had no integer solution.
// Cannot occur for order >= 2; the guard documents intent.
class no_integer_degree_error : public std::logic_error {
 public:
  explicit no_integer_degree_error(const std::string& what)
      : std::logic_error(what) {}
};

// Parse failure, with position and the tokens that would have been accepted.
class syntax_error : public std::runtime_error {
 public:
  syntax_error(const std::string& message, int line, int column,
               std::string expected = {})
      : std::runtime_error(message),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

// A tail marker placed anywhere other than once, inside the innermost root.
class tail_placement_error : public std::runtime_error {
 public:
  explicit tail_placement_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Expression contains a tail marker but no resolution value was supplied.
class unresolved_tail_error : public std::runtime_error {
 public:
  explicit unresolved_tail_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A plot was requested for an empty sweep.
class empty_sweep_error : public std::invalid_argument {
 public:
  explicit empty_sweep_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace radix
