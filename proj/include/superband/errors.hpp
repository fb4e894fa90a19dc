#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superband {

  /// Base class of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Out-of-range configuration (generator count, degree caps, suite options).
  class ConfigError : public Error {
   public:
    using Error::Error;
  };

  /// Operands created under different algebra contexts.
  class ContextError : public Error {
   public:
    using Error::Error;
  };

  /// A value has the wrong Z2-grading for the requested operation.
  class ParityError : public Error {
   public:
    using Error::Error;
  };

  /// Dimension mismatch or a shape precondition (e.g. antitriangle) violated.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  /// Inversion of an element (or matrix) whose body vanishes.
  class NotInvertible : public Error {
   public:
    using Error::Error;
  };

  /// Malformed input. `byte_offset` is the position reported by the JSON
  /// reader, or npos for structurally valid JSON with invalid content.
  class ParseError : public Error {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(std::string const& what, std::size_t byte_offset = npos)
        : Error(byte_offset == npos
                    ? what
                    : what + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    [[nodiscard]] std::size_t byte_offset() const noexcept {
      return byte_offset_;
    }

   private:
    std::size_t byte_offset_;
  };

}  // namespace superband
