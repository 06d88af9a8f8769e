#pragma once

#include <stdexcept>
#include <string>

namespace ncht {

// Malformed or inconsistent input (bad sizes, invalid hyperedges, crossing
// input where a noncrossing one is required, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two permutations are not related in the reflection order.
class NotComparable : public InvalidArgument {
public:
  NotComparable() : InvalidArgument("not comparable") {}
  explicit NotComparable(const std::string& what) : InvalidArgument("not comparable: " + what) {}
};

// A factorization whose reflection lengths do not add up.
class NotReduced : public InvalidArgument {
public:
  NotReduced() : InvalidArgument("not reduced") {}
  explicit NotReduced(const std::string& what) : InvalidArgument("not reduced: " + what) {}
};

// A chain of prefix closures that is not a chain of noncrossing partitions.
class LeavesLattice : public InvalidArgument {
public:
  LeavesLattice() : InvalidArgument("leaves the lattice") {}
  explicit LeavesLattice(const std::string& what) : InvalidArgument("leaves the lattice: " + what) {}
};

// An enumeration was requested beyond the configured size cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncht
