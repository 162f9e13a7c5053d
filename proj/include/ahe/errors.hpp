#pragma once

#include <stdexcept>
#include <string>

namespace ahe {

/** File or format problem while reading/writing images. */
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/** Failure inside a numerical routine (singular solve, invalid field). */
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ahe
