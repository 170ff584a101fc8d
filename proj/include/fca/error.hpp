#pragma once

#include <stdexcept>
#include <string>

namespace fca {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid context construction or a set/concept used against the wrong context.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Malformed input in one of the context file formats or the incident CSV.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Incident records that cannot be turned into a context.
class IngestError : public Error {
 public:
  using Error::Error;
};

}  // namespace fca
