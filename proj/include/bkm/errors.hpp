#pragma once

#include <stdexcept>
#include <string>

namespace bkm {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coincident knots or otherwise unusable point sets.
class DegenerateGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factorization was refused or failed. The 1-norm condition estimate is
// carried along (infinity for an exactly singular matrix).
class IllConditioned : public std::runtime_error {
 public:
  IllConditioned(const std::string& what, double condition_estimate);

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bkm
