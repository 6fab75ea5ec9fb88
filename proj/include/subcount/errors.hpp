#ifndef SUBCOUNT_ERRORS_HPP
#define SUBCOUNT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subcount {

enum class ErrorCode {
  Domain,
  OrderCapExceeded,
  LatticeCapExceeded,
  IsomorphismCapExceeded,
  InvalidPermutation,
  InvalidTable,
  InvalidAction,
  NotPrimePower,
  NotSquarefree,
  EvenCharacteristic,
  SizeMismatch,
  Parse,
  Format,
  Io,
  InternalInconsistency,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::Parse, "parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Thrown when the subgroup lattice grows past a cap; partial_count is the
// number of distinct subgroups found before aborting.
class LatticeCapExceeded : public Error {
public:
  LatticeCapExceeded(std::size_t partial_count, const std::string& message)
    : Error(ErrorCode::LatticeCapExceeded, message), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

private:
  std::size_t partial_count_;
};

} // namespace subcount

#endif // SUBCOUNT_ERRORS_HPP
