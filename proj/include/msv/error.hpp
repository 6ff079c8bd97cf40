#pragma once

#include <stdexcept>
#include <string>

namespace msv {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raster dimensions (or channel counts) of two operands disagree.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Byte stream or image file violates its format contract
/// (bad magic, version mismatch, truncated payload, run-sum mismatch,
/// unsupported bit depth).
class FormatError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked out of protocol order or with an argument
/// outside its domain (missing first-frame mask, undefined IoU,
/// frame index out of range).
class ProtocolError : public Error {
public:
    using Error::Error;
};

} // namespace msv
