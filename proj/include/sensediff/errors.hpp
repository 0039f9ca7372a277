#pragma once

#include <stdexcept>
#include <string>

namespace sensediff {

// Base class for all toolkit failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration, parameters or command line. CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad or inconsistent input data. CLI exit code 3.
class DataError : public Error {
 public:
  using Error::Error;
};

// A word is not present in the structure being queried.
class UnknownWordError : public DataError {
 public:
  using DataError::DataError;
};

// Paired inputs disagree (different target word, different synset universe, ...).
class InputMismatchError : public DataError {
 public:
  using DataError::DataError;
};

// An id refers to something that does not exist (synset, pair, cluster, ...).
class ReferenceError : public DataError {
 public:
  using DataError::DataError;
};

// The hypernym taxonomy contains a cycle.
class TaxonomyCycleError : public DataError {
 public:
  using DataError::DataError;
};

// A word carries no synset in the inventory.
class NoSenseError : public DataError {
 public:
  using DataError::DataError;
};

// A word has too few distributional neighbors to build an ego network.
class TooFewNeighborsError : public DataError {
 public:
  using DataError::DataError;
};

// Topic induction was asked to run on empty input.
class EmptyModelError : public DataError {
 public:
  using DataError::DataError;
};

// Chance agreement is 1 while observed agreement is not; kappa is undefined.
class UndefinedAgreementError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace sensediff
