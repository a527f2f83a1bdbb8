#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricent {

// Unknown node label.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A quantity is undefined for the given input (density with n < 2, k >= n).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based; 0 when the error is not tied to a line (unreadable file).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, std::size_t iterations)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + " after " +
                           std::to_string(iterations) + " iterations)"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

// Plot series assembled from reports with different measure sets.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force oracle asked to run outside its size guard.
class RefusalError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tricent
