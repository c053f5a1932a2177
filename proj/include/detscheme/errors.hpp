#pragma once

#include <stdexcept>
#include <string>

namespace detscheme {

// Input that cannot describe a morphism A -> B at all (b = 0, a < b, n < 2,
// codimension larger than n, unparsable text).
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a hypothesis of the formula being evaluated.
class HypothesisError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Every resampling attempt produced a degenerate determinantal ideal.
class ResamplingExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An oracle result moved when its degree bound or window was pushed by one.
class StabilizationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace detscheme
