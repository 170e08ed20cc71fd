#pragma once

#include <stdexcept>
#include <string>

namespace crossed {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Letter or generator outside the declared alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

// Operands from different group descriptors.
class GroupMismatchError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace crossed
