#include "bitminer/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "bitminer/errors.hpp"

namespace bitminer {

namespace {

constexpr std::uint32_t kWordBits = 64;

std::uint32_t word_count(std::uint32_t rows) {
  return (rows + kWordBits - 1) / kWordBits;
}

void require_compatible(const BitColumn& a, const BitColumn& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("column row counts differ: " +
                         std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()));
  }
  if (a.representation() != b.representation()) {
    throw DimensionError("column representations differ");
  }
}

}  // namespace

BitColumn::BitColumn(Representation repr, std::uint32_t rows)
    : repr_(repr), rows_(rows) {
  if (repr_ == Representation::dense) {
    words_.assign(word_count(rows_), 0);
  }
}

void BitColumn::set(std::uint32_t row) {
  assert(row < rows_);
  if (repr_ == Representation::dense) {
    words_[row / kWordBits] |= std::uint64_t{1} << (row % kWordBits);
  } else {
    assert(tids_.empty() || tids_.back() < row);
    tids_.push_back(row);
  }
}

bool BitColumn::test(std::uint32_t row) const {
  assert(row < rows_);
  if (repr_ == Representation::dense) {
    return (words_[row / kWordBits] >> (row % kWordBits)) & 1u;
  }
  return std::binary_search(tids_.begin(), tids_.end(), row);
}

std::uint64_t BitColumn::popcount() const noexcept {
  if (repr_ == Representation::sparse) return tids_.size();
  std::uint64_t total = 0;
  for (const auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::uint32_t> BitColumn::row_indices() const {
  if (repr_ == Representation::sparse) return tids_;
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const auto b = static_cast<std::uint32_t>(std::countr_zero(bits));
      out.push_back(w * kWordBits + b);
      bits &= bits - 1;
    }
  }
  return out;
}

BitColumn BitColumn::slice(std::uint32_t begin, std::uint32_t end) const {
  assert(begin <= end && end <= rows_);
  const std::uint32_t n = end - begin;
  BitColumn out(repr_, n);
  if (repr_ == Representation::sparse) {
    const auto lo = std::lower_bound(tids_.begin(), tids_.end(), begin);
    const auto hi = std::lower_bound(lo, tids_.end(), end);
    out.tids_.reserve(static_cast<std::size_t>(hi - lo));
    for (auto it = lo; it != hi; ++it) out.tids_.push_back(*it - begin);
    return out;
  }
  const std::uint32_t off = begin % kWordBits;
  const std::uint32_t base = begin / kWordBits;
  for (std::uint32_t k = 0; k < out.words_.size(); ++k) {
    std::uint64_t w = words_[base + k] >> off;
    if (off != 0 && base + k + 1 < words_.size()) {
      w |= words_[base + k + 1] << (kWordBits - off);
    }
    out.words_[k] = w;
  }
  // Keep the padding-zero invariant on the last word.
  if (n % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (n % kWordBits)) - 1;
  }
  return out;
}

BitColumn intersect(const BitColumn& a, const BitColumn& b) {
  require_compatible(a, b);
  BitColumn out(a.representation(), a.rows());
  if (a.representation() == Representation::dense) {
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
      out.words_[i] = a.words_[i] & b.words_[i];
    }
  } else {
    std::set_intersection(a.tids_.begin(), a.tids_.end(), b.tids_.begin(),
                          b.tids_.end(), std::back_inserter(out.tids_));
  }
  return out;
}

BitColumn unite(const BitColumn& a, const BitColumn& b) {
  require_compatible(a, b);
  BitColumn out(a.representation(), a.rows());
  if (a.representation() == Representation::dense) {
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
      out.words_[i] = a.words_[i] | b.words_[i];
    }
  } else {
    std::set_union(a.tids_.begin(), a.tids_.end(), b.tids_.begin(),
                   b.tids_.end(), std::back_inserter(out.tids_));
  }
  return out;
}

BitMatrix BitMatrix::build(const TransactionDatabase& db, Representation repr) {
  const auto rows = static_cast<std::uint32_t>(db.transaction_count());
  BitMatrix m(repr, rows);
  m.columns_.assign(db.item_count(), BitColumn(repr, rows));
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (const auto item : db.transactions[i]) {
      m.columns_[item].set(i);
    }
  }
  return m;
}

const BitColumn& BitMatrix::column(std::uint32_t item) const {
  if (item >= columns_.size()) {
    throw UnknownItemError("item id " + std::to_string(item) +
                           " outside catalog of " +
                           std::to_string(columns_.size()));
  }
  return columns_[item];
}

std::uint64_t BitMatrix::support_of(
    std::span<const std::uint32_t> itemset) const {
  if (itemset.empty()) return rows_;
  const BitColumn* acc = &column(itemset.front());
  BitColumn scratch(repr_, 0);
  for (std::size_t i = 1; i < itemset.size(); ++i) {
    scratch = intersect(*acc, column(itemset[i]));
    acc = &scratch;
  }
  return acc->popcount();
}

std::uint64_t BitMatrix::support_of(
    std::initializer_list<std::uint32_t> itemset) const {
  return support_of(std::span<const std::uint32_t>(itemset.begin(), itemset.size()));
}

std::uint64_t BitMatrix::estimate_memory() const noexcept {
  if (repr_ == Representation::dense) {
    return std::uint64_t{8} * columns() * word_count(rows_);
  }
  std::uint64_t indices = 0;
  for (const auto& col : columns_) indices += col.tids().size();
  return 8 * indices;
}

BitMatrix BitMatrix::slice_rows(std::uint32_t begin, std::uint32_t end) const {
  assert(begin <= end && end <= rows_);
  BitMatrix out(repr_, end - begin);
  out.columns_.reserve(columns_.size());
  for (const auto& col : columns_) out.columns_.push_back(col.slice(begin, end));
  return out;
}

}  // namespace bitminer
