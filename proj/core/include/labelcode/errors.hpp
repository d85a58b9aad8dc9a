#pragma once

#include <stdexcept>
#include <string>

namespace labelcode {

// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: alphabet mismatch, out-of-range parameters, malformed text.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A labeling word that no sequence produces.
class InvalidLabeling : public Error {
 public:
  using Error::Error;
};

// More than one sequence produces the labeling; the label set is not path-unique.
class AmbiguousLabeling : public Error {
 public:
  using Error::Error;
};

// No codeword lies within the correction radius of the received word.
class NoCodeword : public Error {
 public:
  using Error::Error;
};

// Several codewords lie within the correction radius; parameters are misused.
class MultipleCandidates : public Error {
 public:
  using Error::Error;
};

class NotDecodable : public Error {
 public:
  using Error::Error;
};

// The candidate-enumeration decoder found more than one surviving codeword.
class AmbiguousDecoding : public Error {
 public:
  using Error::Error;
};

class UncorrectableSyndrome : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace labelcode
