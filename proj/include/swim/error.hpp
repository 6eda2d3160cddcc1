#pragma once

#include <stdexcept>
#include <string>

namespace swim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure in a line-oriented document (config or trace).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace swim
