#pragma once

#include <stdexcept>
#include <string>

namespace qkappa {

struct InvalidRankError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidWeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation would materialize past the dimension threshold.
struct ResourceError : std::runtime_error {
  long long required_dim;
  long long threshold;
  ResourceError(long long required, long long limit)
      : std::runtime_error("operation requires dimension " + std::to_string(required) +
                           " above threshold " + std::to_string(limit)),
        required_dim(required),
        threshold(limit) {}
};

}  // namespace qkappa
