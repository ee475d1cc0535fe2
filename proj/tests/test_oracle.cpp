#include <map>

#include "bitminer/errors.hpp"
#include "bitminer/oracle.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace bitminer;

TEST_CASE("brute force mining is hand-checkable on the derived database") {
  const auto db = testing::derived_db();
  MiningConfig cfg;
  cfg.threshold = Threshold::absolute(2);
  const auto result = brute_force_mine(db, cfg);
  REQUIRE(result.size() == 5);
  CHECK(result[0] == FrequentItemset{{0}, 4, 5});
  CHECK(result[1] == FrequentItemset{{1}, 4, 5});
  CHECK(result[2] == FrequentItemset{{2}, 2, 5});
  CHECK(result[3] == FrequentItemset{{0, 1}, 3, 5});
  CHECK(result[4] == FrequentItemset{{0, 2}, 2, 5});
}

TEST_CASE("an empty database yields nothing under GT") {
  TransactionDatabase empty;
  MiningConfig cfg;
  cfg.threshold = Threshold::absolute(0);
  cfg.compare = Compare::gt;
  CHECK(brute_force_mine(empty, cfg).empty());
}

TEST_CASE("a single transaction enumerates its own subsets") {
  const auto db = parse_baskets(std::string_view("a,b\n"));
  MiningConfig cfg;
  cfg.threshold = Threshold::absolute(1);
  const auto result = brute_force_mine(db, cfg);
  REQUIRE(result.size() == 3);
  CHECK(result[0].items == std::vector<std::uint32_t>{0});
  CHECK(result[1].items == std::vector<std::uint32_t>{1});
  CHECK(result[2].items == std::vector<std::uint32_t>{0, 1});
  for (const auto& f : result) CHECK(f.support == 1);
}

TEST_CASE("the oracle refuses catalogs past its enumeration limit") {
  TransactionDatabase wide;
  for (int j = 0; j < 21; ++j) wide.catalog.intern("x" + std::to_string(j));
  wide.transactions.push_back({0});
  MiningConfig cfg;
  CHECK_THROWS_AS(brute_force_mine(wide, cfg), OracleScaleError);
}

TEST_CASE("oracle output is downward closed and anti-monotone by construction") {
  const GeneratorSpec spec{32, 9, Rational(3, 10), 0xDEAD};
  const auto db = random_db(spec);
  MiningConfig cfg;
  cfg.threshold = Threshold::absolute(2);
  const auto result = brute_force_mine(db, cfg);
  std::map<std::vector<std::uint32_t>, std::uint64_t> support;
  for (const auto& f : result) support[f.items] = f.support;
  for (const auto& f : result) {
    for (std::size_t drop = 0; drop < f.items.size(); ++drop) {
      if (f.items.size() < 2) continue;
      auto subset = f.items;
      subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(drop));
      REQUIRE(support.count(subset) == 1);
      CHECK(support[subset] >= f.support);
    }
  }
}

TEST_CASE("random_db is deterministic per seed") {
  const GeneratorSpec spec{40, 10, Rational(1, 5), 123456789};
  CHECK(random_db(spec) == random_db(spec));
  GeneratorSpec other = spec;
  other.seed = 987654321;
  CHECK_FALSE(random_db(spec) == random_db(other));
}

TEST_CASE("density boundaries are exact") {
  GeneratorSpec spec{10, 6, Rational(0, 1), 7};
  for (const auto& tx : random_db(spec).transactions) CHECK(tx.empty());

  spec.density = Rational(1, 1);
  const auto full = random_db(spec);
  for (const auto& tx : full.transactions) {
    CHECK(tx.size() == 6);  // every transaction holds the full catalog
  }
  CHECK(full.item_count() == 6);
}

TEST_CASE("empty transactions are retained by the generator") {
  const GeneratorSpec spec{50, 4, Rational(1, 20), 99};
  const auto db = random_db(spec);
  CHECK(db.transaction_count() == 50);  // sparse draws leave some rows empty
  bool any_empty = false;
  for (const auto& tx : db.transactions) any_empty |= tx.empty();
  CHECK(any_empty);
}

TEST_CASE("max_len caps oracle enumeration") {
  const auto db = testing::derived_db();
  MiningConfig cfg;
  cfg.threshold = Threshold::absolute(1);
  cfg.max_len = 2;
  const auto result = brute_force_mine(db, cfg);
  CHECK(result.size() == 9);
  for (const auto& f : result) CHECK(f.items.size() <= 2);
}
