#pragma once

#include <stdexcept>
#include <string>

namespace dimon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live on different ambient sets {1..n}.
class AmbientMismatchError : public Error {
 public:
  using Error::Error;
};

// A point, index or degree outside the admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// distance_sequence requested for a set with fewer than two points.
class UndefinedSequenceError : public Error {
 public:
  using Error::Error;
};

class NotMemberError : public Error {
 public:
  using Error::Error;
};

class NotInverseError : public Error {
 public:
  using Error::Error;
};

class NotGeneratingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dimon
