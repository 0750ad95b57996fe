#pragma once

#include <stdexcept>
#include <string>

namespace lattice6 {

// Base of every error the library throws on bad input or broken invariants.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFullDimensional : public Error {
public:
    NotFullDimensional() : Error("configuration is not 3-dimensional") {}
};

class WrongSize : public Error {
public:
    WrongSize(std::size_t expected, std::size_t got)
        : Error("expected " + std::to_string(expected) + " points, got " + std::to_string(got)) {}
    explicit WrongSize(const std::string& what) : Error(what) {}
};

class DegenerateSource : public Error {
public:
    DegenerateSource() : Error("source points are affinely dependent") {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t i, std::size_t n)
        : Error("index " + std::to_string(i) + " out of range for " + std::to_string(n) + " points") {}
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

class NotSize5 : public Error {
public:
    NotSize5() : Error("convex hull has lattice points other than the five given") {}
};

class NoMatch : public Error {
public:
    using Error::Error;
};

class CorruptData : public Error {
public:
    using Error::Error;
};

}  // namespace lattice6
