#pragma once

#include <stdexcept>
#include <string>

namespace indep
{
    /// A precondition on an argument was violated (bad vertex, bad parameter, ...).
    class DomainError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed textual input: graph6 lines, generator specs, rationals, reports.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
