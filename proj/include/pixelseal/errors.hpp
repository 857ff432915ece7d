#pragma once

#include <stdexcept>
#include <string>

namespace pixelseal {

/// Base class for all pixelseal errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two grids/images that must agree in size do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input pixel format outside the supported set (8-bit RGB).
class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

/// A file could not be decoded as any supported image format.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
    using Error::Error;
};

/// A value violates a precondition (empty camera id, bad plane index, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Image statistics are degenerate and the requested metric is undefined.
class StatisticsError : public Error {
public:
    using Error::Error;
};

}  // namespace pixelseal
