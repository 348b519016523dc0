#pragma once

#include <stdexcept>
#include <string>

namespace regbounds {

// Domain error taxonomy. Every throwing operation documents which of these
// it can raise; anything else escaping the library is a bug.

struct InvalidGeometry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedModel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSnr : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularGradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularInformation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoTransition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotObserved : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace regbounds
