#pragma once

#include <cstdint>
#include <vector>

#include "bitminer/miner.hpp"

namespace bitminer {

/// k contiguous, disjoint row ranges covering [0, n), sizes differing by at
/// most one. Ranges beyond the n-th row come out empty when k > n.
struct PartitionPlan {
  struct Range {
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::uint32_t size() const noexcept { return end - begin; }
  };

  std::vector<Range> ranges;

  /// Throws InvalidPartitionError when k == 0.
  static PartitionPlan make(std::uint32_t rows, std::uint32_t k);
};

/// Two-phase partitioned mining.
///
/// Phase 1 mines each row-range sub-matrix with the global relative threshold
/// applied to the partition's own row count (absolute thresholds are first
/// converted to count/n). Any globally frequent itemset is locally frequent
/// in at least one partition, so the phase-1 union is a complete candidate
/// set; phase 2 recounts every candidate on the full matrix and keeps those
/// passing the global predicate. The result equals mine_frequent exactly.
/// Phase-1 mines run concurrently on a small worker pool.
std::vector<FrequentItemset> mine_partitioned(const BitMatrix& matrix,
                                              const MiningConfig& config,
                                              std::uint32_t partitions);

}  // namespace bitminer
