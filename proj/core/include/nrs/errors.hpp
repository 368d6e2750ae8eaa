#pragma once

#include <stdexcept>
#include <string>

namespace nrs {

/// Invalid values, weights, schemas or configuration documents.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands whose label schemas cannot be brought together.
class AlignmentError : public ValidationError {
 public:
  explicit AlignmentError(const std::string& what) : ValidationError(what) {}
};

/// Runtime data problems: missing files, degenerate neighborhoods, zero-mass curves.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nrs
