#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bitminer/ingest.hpp"
#include "bitminer/oracle.hpp"

namespace bitminer::testing {

/// Five-basket fixture used across the suites:
///   T0={a,b} T1={a,c} T2={a,b,c} T3={b} T4={a,b,d}
/// Ids by first appearance: a=0 b=1 c=2 d=3. Oracle-verified supports:
/// a:4 b:4 c:2 d:1, ab:3 ac:2 bc:1 ad:1 bd:1 cd:0, abc:1 abd:1.
inline TransactionDatabase derived_db() {
  return parse_baskets(std::string_view("a,b\na,c\na,b,c\nb\na,b,d\n"));
}

/// Deterministic market-basket corpus with the published Groceries shape:
/// 9,835 transactions over exactly 169 items. Item popularity follows a
/// harmonic (Zipf-like) weight table, basket sizes are 1..8 draws, and each
/// of the first 169 baskets seeds one distinct item so the whole catalog is
/// reachable from the file. Integer arithmetic only, so the corpus is
/// byte-identical on every platform.
inline TransactionDatabase synthetic_groceries(std::uint64_t seed = 42) {
  constexpr std::uint32_t kTransactions = 9835;
  constexpr std::uint32_t kItems = 169;

  TransactionDatabase db;
  for (std::uint32_t j = 0; j < kItems; ++j) {
    std::string name = "item";
    name += static_cast<char>('0' + j / 100);
    name += static_cast<char>('0' + (j / 10) % 10);
    name += static_cast<char>('0' + j % 10);
    db.catalog.intern(name);
  }

  std::vector<std::uint64_t> cumulative(kItems);
  std::uint64_t total = 0;
  for (std::uint32_t j = 0; j < kItems; ++j) {
    total += (std::uint64_t{1} << 32) / (j + 1);
    cumulative[j] = total;
  }

  SplitMix64 rng(seed);
  db.transactions.reserve(kTransactions);
  for (std::uint32_t t = 0; t < kTransactions; ++t) {
    std::set<std::uint32_t> basket;
    if (t < kItems) basket.insert(t);
    const std::uint32_t draws = 1 + static_cast<std::uint32_t>(rng.next() % 8);
    for (std::uint32_t k = 0; k < draws; ++k) {
      const std::uint64_t u = rng.next() % total;
      const auto it =
          std::upper_bound(cumulative.begin(), cumulative.end(), u);
      basket.insert(static_cast<std::uint32_t>(it - cumulative.begin()));
    }
    db.transactions.emplace_back(basket.begin(), basket.end());
  }
  return db;
}

}  // namespace bitminer::testing
