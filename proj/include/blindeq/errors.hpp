#ifndef BLINDEQ_ERRORS_HPP
#define BLINDEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blindeq {

/// Configuration or schema problem. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure (unstable ODE step, non-finite gradient). Exit code 3.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Equalizer output could not be correlated with the reference sequence.
class AlignmentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace blindeq

#endif
