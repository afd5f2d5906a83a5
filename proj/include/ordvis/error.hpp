#pragma once

#include <stdexcept>
#include <string>

namespace ordvis {

/// Malformed input: bad indices, self-loops, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on a graph outside its class (not H-free, not
/// capped, ...). Subclasses carry the certificate explaining why.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant that the theory guarantees did not hold. Seeing one
/// of these means an upstream precondition was silently violated.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A brute-force oracle was asked to run beyond its size guard.
class GuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace ordvis
