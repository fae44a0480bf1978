#pragma once

#include <stdexcept>
#include <string>

namespace braidinv {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration (group closure, orbit search) exceeded its state cap.
class ResourceCapError : public Error {
public:
  explicit ResourceCapError(const std::string& what) : Error(what) {}
};

// A document violated the JSON schema; the message names the field.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace braidinv
