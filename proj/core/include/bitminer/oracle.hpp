#pragma once

#include <cstdint>

#include "bitminer/ingest.hpp"
#include "bitminer/miner.hpp"
#include "bitminer/rational.hpp"

namespace bitminer {

/// splitmix64 (Steele, Lea, Vigna). Fixed here, rather than delegated to the
/// standard library, so generated corpora are bit-reproducible across
/// toolchains and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct GeneratorSpec {
  std::uint32_t transactions = 0;
  std::uint32_t items = 0;
  Rational density;  // per-cell inclusion probability in [0, 1]
  std::uint64_t seed = 0;
};

/// Seeded random database: cell (i, j) is drawn in row-major order and set
/// with probability `density` (exact at 0 and 1). Items are named i0..i{m-1}.
/// Empty transactions are kept so the oracle and the miner see the same rows.
TransactionDatabase random_db(const GeneratorSpec& spec);

/// Exhaustive reference miner: enumerates every non-empty itemset up to
/// max_len and counts support by scanning transactions for set containment.
/// Shares resolve_threshold with the real miner but never touches a
/// BitMatrix, so the two counting paths stay independent.
/// Throws OracleScaleError when the catalog exceeds 20 items.
std::vector<FrequentItemset> brute_force_mine(const TransactionDatabase& db,
                                              const MiningConfig& config);

}  // namespace bitminer
