#pragma once

#include <stdexcept>
#include <string>

namespace glcp {

/// Thrown when an exhaustive routine is asked to handle a graph larger than
/// its configured vertex cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, int n, int cap)
      : std::length_error(what + ": graph has " + std::to_string(n) +
                          " vertices, cap is " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  int vertices() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

/// Thrown when the hypotheses of a structural check do not hold. Kept distinct
/// from a negative verification result.
class HypothesisNotMet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace glcp
