// include/holdring/error.hpp: exception hierarchy shared by all modules.

#pragma once

#include <stdexcept>
#include <string>

namespace holdring {

    class Error : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    // A carry or digit-extraction process ran past its position cap, or was
    // shown to produce an infinite expansion.
    class NonTerminating : public Error {
    public:
        using Error::Error;
    };

    class NoResidueDigit : public Error {
    public:
        using Error::Error;
    };

    class NotDivisible : public Error {
    public:
        using Error::Error;
    };

    class TooLarge : public Error {
    public:
        using Error::Error;
    };

    class InvalidSystem : public Error {
    public:
        using Error::Error;
    };

    class ParseError : public Error {
    public:
        using Error::Error;
    };

    class IoError : public Error {
    public:
        using Error::Error;
    };

} // namespace holdring
