#pragma once

#include <stdexcept>
#include <string>

namespace moulton {

/// Raised when an exact geometric operation is asked for something undefined
/// (degenerate join/meet, inconsistent projectivity fit, query outside a
/// chart domain, ...). The message is the stable error code callers match on.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed textual input (bad rational literal, bad JSON shape).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace moulton
