#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qconv {

/// Large counts for messages: integers up to 6 digits, scientific beyond.
inline std::string format_count(long double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6Lg", x);
  return buf;
}

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or size cap was exceeded. The CLI maps this family to exit code 3.
class CapError : public Error {
 public:
  using Error::Error;
};

class MaskWidthError : public Error {
 public:
  MaskWidthError(int got, int expected)
      : Error("subset mask width " + std::to_string(got) + " does not match ground size " +
              std::to_string(expected)) {}
};

class KTooLargeError : public CapError {
 public:
  KTooLargeError(int k, int cap)
      : CapError("k = " + std::to_string(k) + " exceeds the configured cap k_cap = " +
                 std::to_string(cap)) {}
};

class GroundTooLargeError : public CapError {
 public:
  GroundTooLargeError(int n, int cap, const std::string& what)
      : CapError(what + ": ground size " + std::to_string(n) + " exceeds cap " +
                 std::to_string(cap)) {}
};

class EnumCapError : public CapError {
 public:
  EnumCapError(long double iterations, std::uint64_t cap)
      : CapError("exact enumeration needs " + format_count(iterations) +
                 " iterations, above iteration_cap = " + std::to_string(cap) +
                 " (use a FlatsOnly or Sampled strategy, or raise the cap)"),
        iterations_(iterations) {}
  long double iterations() const { return iterations_; }

 private:
  long double iterations_;
};

class FlatExplosionError : public CapError {
 public:
  explicit FlatExplosionError(std::uint64_t cap)
      : CapError("flat enumeration exceeded flat_cap = " + std::to_string(cap)) {}
};

class DivisibilityError : public Error {
 public:
  DivisibilityError(int m, int n)
      : Error("stretch embedding needs m | n, got m = " + std::to_string(m) +
              ", n = " + std::to_string(n)) {}
};

class EmptyProfileError : public Error {
 public:
  EmptyProfileError() : Error("Hausdorff distance of an empty profile set is undefined") {}
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class DegenerateNormalizationError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class RationalOverflowError : public Error {
 public:
  RationalOverflowError() : Error("rational arithmetic overflowed 64-bit storage") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qconv
