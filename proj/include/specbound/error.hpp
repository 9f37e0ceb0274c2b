#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace specbound {

enum class ErrorKind {
  NegativeEntry,
  NonFinite,
  NonSquare,
  DimensionMismatch,
  NotEquitable,
  IndexOutOfRange,
  InvalidSize,
  NotTwoByTwo,
  InvalidFill,
  InvalidPartition,
  InvalidPermutation,
  UnsupportedMix,
  PartitionSpaceTooLarge,
  EnclosureDisagreement,
  InvalidOptions,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The two optional indices carry the
/// offending entry (row, column) or block (i, j) when the kind has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> i = std::nullopt,
        std::optional<std::size_t> j = std::nullopt)
      : std::runtime_error(what), kind_(kind), i_(i), j_(j) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> row() const noexcept { return i_; }
  std::optional<std::size_t> col() const noexcept { return j_; }

  /// Index of the failing step inside apply_sequence, if any.
  std::optional<std::size_t> step() const noexcept { return step_; }
  Error with_step(std::size_t step) const {
    Error e(kind_, "step " + std::to_string(step) + ": " + what(), i_, j_);
    e.step_ = step;
    return e;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> i_;
  std::optional<std::size_t> j_;
  std::optional<std::size_t> step_;
};

}  // namespace specbound
