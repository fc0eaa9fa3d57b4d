#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace htlp {

// Thrown by the formula and theory parsers. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(render(line, column, expected, found)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string render(std::size_t line, std::size_t column,
                              const std::vector<std::string>& expected, const std::string& found) {
        std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": syntax error";
        if (!found.empty()) msg += " at " + found;
        if (!expected.empty()) {
            msg += ", expected ";
            if (expected.size() > 1) msg += "one of ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += ", ";
                msg += expected[i];
            }
        }
        return msg;
    }

    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

// An exhaustive enumeration was requested over more atoms than allowed.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t atoms, std::size_t cap)
        : std::runtime_error("signature has " + std::to_string(atoms) +
                             " atoms, enumeration cap is " + std::to_string(cap)),
          atoms_(atoms), cap_(cap) {}

    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t atoms_;
    std::size_t cap_;
};

// A formula mentions an atom outside the signature it is evaluated against.
class SignatureMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed interpretation, e.g. here set not contained in there set.
class InvalidInterpretation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input to program_from_set violates total-closedness.
class NotTotalClosed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside a supported numeric range.
class BoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace htlp
