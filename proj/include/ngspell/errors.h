#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ngspell {

/// Malformed NGIDX input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedVersionError : public ParseError {
public:
    using ParseError::ParseError;
};

/// An n-gram query outside orders 1..5.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyCorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Candidate generation requested for a word with no letter bigram.
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ngspell
