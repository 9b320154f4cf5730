#ifndef IRSFIELD_ERRORS_HPP
#define IRSFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irsfield {

// Geometry or parameter outside the model's validity region
// (e.g. source behind the reflecting plane).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature grid required for the requested accuracy exceeds the cell budget.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario-file syntax or schema violation; line == 0 means "whole file".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace irsfield

#endif
