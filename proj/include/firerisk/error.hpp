#pragma once

#include <stdexcept>
#include <string>

namespace firerisk {

// Base class for every failure the library reports. The CLI maps these to
// exit code 2 (data error), as opposed to argument/usage errors (exit 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input (grid, manifest, CSV, JSON). Carries the 1-based
// line and column of the offending token when they are known; 0 means
// "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& msg)
        : Error(format(source, line, column, msg)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& source, int line, int column,
                              const std::string& msg) {
        std::string out = source;
        if (line > 0) {
            out += ":" + std::to_string(line);
            if (column > 0) out += ":" + std::to_string(column);
        }
        out += ": " + msg;
        return out;
    }

    int line_;
    int column_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Raised when two grids that must share one geometry do not.
class GeometryError : public Error {
public:
    using Error::Error;
};

// Raised by zonal statistics when no cell contributes to the zone.
class EmptyZoneError : public Error {
public:
    using Error::Error;
};

}  // namespace firerisk
