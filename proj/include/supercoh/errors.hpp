#ifndef SUPERCOH_ERRORS_HPP
#define SUPERCOH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercoh {

/// Malformed input: bad document structure, unknown symbols, bad rationals.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  /// 1-based line in the source document, or 0 when unknown.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates the Lie superalgebra axioms.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured matrix size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of columns of any matrix we eliminate.
inline constexpr std::size_t kDefaultColumnCap = 5000;

} // namespace supercoh

#endif
