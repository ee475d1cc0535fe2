#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitminer {

/// Input is not valid UTF-8. `byte_offset` points at the first bad byte.
class IngestError : public std::runtime_error {
 public:
  IngestError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Column operands disagree on row count or representation.
class DimensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An item id outside the matrix column range.
class UnknownItemError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rule generation was handed an itemset collection that is not downward
/// closed, so a needed subset support is unavailable.
class MissingSubsetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InvalidPartitionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The brute-force miner enumerates 2^m itemsets and refuses m > 20.
class OracleScaleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bitminer
