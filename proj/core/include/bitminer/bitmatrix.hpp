#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bitminer/ingest.hpp"

namespace bitminer {

enum class Representation { dense, sparse };

/// One item column of the occurrence matrix.
///
/// Dense columns pack row bits into 64-bit words (row i lives in bit i%64 of
/// word i/64); padding bits above row n-1 stay zero so popcount needs no
/// masking. Sparse columns hold the strictly ascending list of rows whose bit
/// is set (a tid-list).
class BitColumn {
 public:
  BitColumn(Representation repr, std::uint32_t rows);

  Representation representation() const noexcept { return repr_; }
  std::uint32_t rows() const noexcept { return rows_; }

  /// Build-time only. Sparse columns require ascending, duplicate-free rows.
  void set(std::uint32_t row);

  bool test(std::uint32_t row) const;
  std::uint64_t popcount() const noexcept;

  /// Ascending rows whose bit is set, regardless of representation.
  std::vector<std::uint32_t> row_indices() const;

  /// Restriction of the column to rows [begin, end), reindexed from zero.
  BitColumn slice(std::uint32_t begin, std::uint32_t end) const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  const std::vector<std::uint32_t>& tids() const noexcept { return tids_; }

  bool operator==(const BitColumn&) const = default;

  friend BitColumn intersect(const BitColumn& a, const BitColumn& b);
  friend BitColumn unite(const BitColumn& a, const BitColumn& b);

 private:
  Representation repr_;
  std::uint32_t rows_;
  std::vector<std::uint64_t> words_;  // dense payload
  std::vector<std::uint32_t> tids_;   // sparse payload
};

/// Bitwise AND of two columns: word-wise for dense, sorted-list intersection
/// for sparse. Throws DimensionError on row-count or representation mismatch.
BitColumn intersect(const BitColumn& a, const BitColumn& b);

/// Bitwise OR under the same operand rules as intersect.
BitColumn unite(const BitColumn& a, const BitColumn& b);

/// Column-major Boolean occurrence matrix: column j has bit i set exactly
/// when transaction i contains item j. All columns share one representation.
/// Immutable after build; reads are safe from any number of threads.
class BitMatrix {
 public:
  static BitMatrix build(const TransactionDatabase& db, Representation repr);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t columns() const noexcept {
    return static_cast<std::uint32_t>(columns_.size());
  }
  Representation representation() const noexcept { return repr_; }

  /// Throws UnknownItemError when item >= columns().
  const BitColumn& column(std::uint32_t item) const;

  /// Popcount of the left-fold AND over the itemset's columns; the empty
  /// itemset is the empty conjunction and counts every row. Requires a
  /// sorted, duplicate-free id list; throws UnknownItemError on bad ids.
  std::uint64_t support_of(std::span<const std::uint32_t> itemset) const;
  std::uint64_t support_of(std::initializer_list<std::uint32_t> itemset) const;

  /// Deterministic storage formula, independent of the actual in-memory
  /// layout: dense -> m * ceil(n/64) * 8 bytes, sparse -> 8 bytes per stored
  /// row index.
  std::uint64_t estimate_memory() const noexcept;

  /// Sub-matrix over rows [begin, end), same representation.
  BitMatrix slice_rows(std::uint32_t begin, std::uint32_t end) const;

 private:
  BitMatrix(Representation repr, std::uint32_t rows) : repr_(repr), rows_(rows) {}

  Representation repr_;
  std::uint32_t rows_;
  std::vector<BitColumn> columns_;
};

}  // namespace bitminer
