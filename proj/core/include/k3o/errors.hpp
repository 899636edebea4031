#pragma once

#include <stdexcept>
#include <string>

namespace k3o {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    long long actual, expected;
    DimensionMismatch(long long a, long long e)
        : Error("dimension mismatch: got " + std::to_string(a) + ", expected " +
                std::to_string(e)),
          actual(a), expected(e) {}
};

struct UnsupportedOrder : Error {
    using Error::Error;
};

struct WildOrder : Error {
    using Error::Error;
};

struct UnsupportedCharacteristic : Error {
    using Error::Error;
};

struct UnknownLemma : Error {
    using Error::Error;
};

struct InconsistentHypothesis : Error {
    using Error::Error;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct NotInvariant : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    long long found, declared;
    OrderMismatch(long long f, long long d)
        : Error("map order " + std::to_string(f) + " does not match declared " +
                std::to_string(d)),
          found(f), declared(d) {}
};

struct UnknownEntry : Error {
    using Error::Error;
};

struct UnsupportedShape : Error {
    using Error::Error;
};

struct CharacteristicNotAdmissible : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace k3o
