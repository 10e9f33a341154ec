#ifndef COMBGRAPH_ERRORS_HPP
#define COMBGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace combgraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a stated precondition; the message names which one.
struct PreconditionError : Error {
  using Error::Error;
};

// Instance exceeds a configured exhaustive-search cap.
struct SizeCapError : Error {
  using Error::Error;
};

}  // namespace combgraph

#endif
