#pragma once

#include <stdexcept>
#include <string>

namespace lattol {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A label occurs more than once in an element list.
class DuplicateLabel : public Error {
public:
  using Error::Error;
};

/// A cover or relation pair references a label that was never declared.
class UnknownLabel : public Error {
public:
  using Error::Error;
};

/// Request for a builtin lattice that does not exist.
class UnknownName : public Error {
public:
  using Error::Error;
};

/// The cover graph contains a directed cycle, so its closure cannot be a
/// partial order.
class CycleDetected : public Error {
public:
  using Error::Error;
};

/// The given order is not a lattice order. Carries the first offending
/// pair of element ids when one exists.
class NotALattice : public Error {
public:
  explicit NotALattice(const std::string& what, int x = -1, int y = -1)
      : Error(what), x(x), y(y) {}
  int x;
  int y;
};

/// Two values that must live on the same element set do not.
class SizeMismatch : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// An exhaustive enumeration was requested beyond the configured cap.
class TooLarge : public Error {
public:
  TooLarge(const std::string& what, long long pair_count, long long cap)
      : Error(what), pair_count(pair_count), cap(cap) {}
  long long pair_count;
  long long cap;
};

class NotATolerance : public Error {
public:
  using Error::Error;
};

class NotACongruence : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

class NotABlock : public Error {
public:
  using Error::Error;
};

/// The join (or meet) set of two blocks is included in zero or several
/// blocks. This cannot happen for a genuine tolerance, so it always
/// signals an implementation bug.
class UniquenessViolation : public Error {
public:
  using Error::Error;
};

/// A componentwise join or meet of paired-lattice elements escaped the
/// joined block. Also a bug signal.
class ClosureViolation : public Error {
public:
  using Error::Error;
};

/// A guaranteed isomorphism could not be found. Bug signal.
class IsomorphismNotFound : public Error {
public:
  using Error::Error;
};

/// A document failed to parse or violates the document invariants.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace lattol
