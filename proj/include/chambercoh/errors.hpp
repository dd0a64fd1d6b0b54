#pragma once

#include <stdexcept>
#include <string>

namespace chambercoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct DuplicateLineError : Error {
    using Error::Error;
};

struct NonEssentialError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

struct InvalidFlagError : Error {
    using Error::Error;
};

}  // namespace chambercoh
