#include "bitminer/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "bitminer/errors.hpp"

namespace bitminer {

TransactionDatabase random_db(const GeneratorSpec& spec) {
  if (spec.density < Rational(0, 1) || spec.density > Rational(1, 1)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  TransactionDatabase db;
  for (std::uint32_t j = 0; j < spec.items; ++j) {
    db.catalog.intern("i" + std::to_string(j));
  }
  const auto num = static_cast<unsigned __int128>(spec.density.num());
  const auto den = static_cast<unsigned __int128>(spec.density.den());
  const unsigned __int128 cut = num << 64;

  SplitMix64 rng(spec.seed);
  db.transactions.reserve(spec.transactions);
  for (std::uint32_t i = 0; i < spec.transactions; ++i) {
    std::vector<std::uint32_t> tx;
    for (std::uint32_t j = 0; j < spec.items; ++j) {
      const unsigned __int128 draw = rng.next();
      if (draw * den < cut) tx.push_back(j);
    }
    db.transactions.push_back(std::move(tx));
  }
  return db;
}

std::vector<FrequentItemset> brute_force_mine(const TransactionDatabase& db,
                                              const MiningConfig& config) {
  const std::uint32_t m = db.item_count();
  if (m > 20) {
    throw OracleScaleError("brute-force enumeration limited to 20 items, got " +
                           std::to_string(m));
  }
  if (config.max_len && *config.max_len == 0) {
    throw std::invalid_argument("max_len must be >= 1 when set");
  }

  const std::uint64_t n = db.transaction_count();
  const SupportPredicate pred = resolve_threshold(config, n);
  const std::uint32_t max_len =
      config.max_len.value_or(std::numeric_limits<std::uint32_t>::max());

  std::vector<std::uint32_t> masks;
  masks.reserve(db.transactions.size());
  for (const auto& tx : db.transactions) {
    std::uint32_t mask = 0;
    for (const auto item : tx) mask |= std::uint32_t{1} << item;
    masks.push_back(mask);
  }

  std::vector<FrequentItemset> out;
  const std::uint32_t full = (m == 0) ? 0 : ((std::uint32_t{1} << m) - 1);
  for (std::uint32_t candidate = 1; candidate != 0 && candidate <= full;
       ++candidate) {
    if (static_cast<std::uint32_t>(std::popcount(candidate)) > max_len) {
      continue;
    }
    std::uint64_t support = 0;
    for (const auto mask : masks) {
      if ((mask & candidate) == candidate) ++support;
    }
    if (!pred(support)) continue;
    std::vector<std::uint32_t> items;
    for (std::uint32_t bit = 0; bit < m; ++bit) {
      if ((candidate >> bit) & 1) items.push_back(bit);
    }
    out.push_back(FrequentItemset{std::move(items), support, n});
  }

  std::sort(out.begin(), out.end(),
            [](const FrequentItemset& a, const FrequentItemset& b) {
              return canonical_less(a, b);
            });
  return out;
}

}  // namespace bitminer
