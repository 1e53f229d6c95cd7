#pragma once

#include <stdexcept>
#include <string>

namespace symforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad edge id, disconnected
/// input, invalid Whitney move, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exact division left a remainder. Inside the identity checks this means
/// an identity genuinely failed.
class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible") {}
    using Error::Error;
};

class NotMultilinear : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnknownEdge : public PreconditionError {
public:
    explicit UnknownEdge(const std::string& id) : PreconditionError("unknown edge '" + id + "'") {}
};

class UnknownVertex : public PreconditionError {
public:
    explicit UnknownVertex(const std::string& id) : PreconditionError("unknown vertex '" + id + "'") {}
};

class SelfLoopContraction : public PreconditionError {
public:
    explicit SelfLoopContraction(const std::string& id)
        : PreconditionError("cannot contract self-loop '" + id + "'") {}
};

class NotRegularEdge : public PreconditionError {
public:
    explicit NotRegularEdge(const std::string& id)
        : PreconditionError("edge '" + id + "' is a self-loop or a bridge") {}
};

class Disconnected : public PreconditionError {
public:
    Disconnected() : PreconditionError("graph is not connected") {}
};

class NoLegs : public PreconditionError {
public:
    NoLegs() : PreconditionError("graph has no external legs") {}
};

class InvalidMove : public PreconditionError {
public:
    explicit InvalidMove(const std::string& reason) : PreconditionError("invalid move: " + reason) {}
};

class InvalidSetup : public PreconditionError {
public:
    explicit InvalidSetup(const std::string& reason) : PreconditionError("invalid setup: " + reason) {}
};

class DegenerateDelta1 : public PreconditionError {
public:
    DegenerateDelta1() : PreconditionError("Delta1 vanishes; quotient undefined") {}
};

class IndexError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Malformed graph file. The message carries the position of the problem.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace symforge
