#pragma once

#include <stdexcept>
#include <string>

namespace gelflow {

// Bad user input: mismatched dimensions, unreadable files, out-of-range
// parameters. The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Malformed on-disk data. Messages name the byte offset where parsing failed.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (non-finite energy, impossible state). The CLI
// maps this to exit code 3.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gelflow
