#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bitminer/errors.hpp"
#include "bitminer/miner.hpp"
#include "bitminer/oracle.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace bitminer;

namespace {

MiningConfig config_of(Threshold t, Compare cmp = Compare::geq) {
  MiningConfig cfg;
  cfg.threshold = t;
  cfg.compare = cmp;
  return cfg;
}

std::vector<FrequentItemset> mine_db(const TransactionDatabase& db,
                                     const MiningConfig& cfg) {
  return mine_frequent(BitMatrix::build(db, cfg.representation), cfg);
}

}  // namespace

TEST_CASE("resolve_threshold reduces every mode to one exact minimum count") {
  // n=5, relative 2/5, GEQ: counts {2,3,4,5} pass
  auto pred = resolve_threshold(
      config_of(Threshold::relative(Rational(2, 5))), 5);
  CHECK_FALSE(pred(1));
  CHECK(pred(2));
  CHECK(pred(5));

  // n=5, absolute 2, GT: counts {3,4,5} pass
  pred = resolve_threshold(config_of(Threshold::absolute(2), Compare::gt), 5);
  CHECK_FALSE(pred(2));
  CHECK(pred(3));

  // n=9835, relative 1/100, GEQ: minimum passing count is 99
  pred = resolve_threshold(
      config_of(Threshold::relative(Rational(1, 100))), 9835);
  CHECK(pred.min_support == 99);
  CHECK_FALSE(pred(98));
  CHECK(pred(99));

  // GT with the same fraction needs one more than floor(98.35)
  pred = resolve_threshold(
      config_of(Threshold::relative(Rational(1, 100)), Compare::gt), 9835);
  CHECK(pred.min_support == 99);

  // boundary landing exactly on an integer: GEQ keeps it, GT moves past it
  pred = resolve_threshold(config_of(Threshold::relative(Rational(1, 5))), 10);
  CHECK(pred.min_support == 2);
  pred = resolve_threshold(
      config_of(Threshold::relative(Rational(1, 5)), Compare::gt), 10);
  CHECK(pred.min_support == 3);

  // zero-support itemsets never pass, whatever the threshold
  pred = resolve_threshold(config_of(Threshold::absolute(0)), 5);
  CHECK(pred.min_support == 1);
  pred = resolve_threshold(config_of(Threshold::relative(Rational(0, 1))), 5);
  CHECK_FALSE(pred(0));
}

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(Threshold::relative(Rational(11, 10)), std::invalid_argument);
  CHECK(Threshold::absolute(2).to_string() == "abs:2");
  CHECK(Threshold::relative(Rational(1, 100)).to_string() == "rel:1/100");
}

TEST_CASE("mine_frequent reproduces the oracle on the derived database") {
  const auto db = testing::derived_db();

  const auto geq2 = mine_db(db, config_of(Threshold::absolute(2)));
  REQUIRE(geq2.size() == 5);
  CHECK(geq2[0] == FrequentItemset{{0}, 4, 5});        // a
  CHECK(geq2[1] == FrequentItemset{{1}, 4, 5});        // b
  CHECK(geq2[2] == FrequentItemset{{2}, 2, 5});        // c
  CHECK(geq2[3] == FrequentItemset{{0, 1}, 3, 5});     // a,b
  CHECK(geq2[4] == FrequentItemset{{0, 2}, 2, 5});     // a,c
  CHECK(geq2 == brute_force_mine(db, config_of(Threshold::absolute(2))));

  const auto gt2 = mine_db(db, config_of(Threshold::absolute(2), Compare::gt));
  REQUIRE(gt2.size() == 3);
  CHECK(gt2[0].items == std::vector<std::uint32_t>{0});
  CHECK(gt2[1].items == std::vector<std::uint32_t>{1});
  CHECK(gt2[2].items == std::vector<std::uint32_t>{0, 1});

  // nothing exceeds the database size under GT
  CHECK(mine_db(db, config_of(Threshold::absolute(5), Compare::gt)).empty());

  const auto geq1 = mine_db(db, config_of(Threshold::absolute(1)));
  CHECK(geq1.size() == 11);  // 4 singletons, 5 pairs, 2 triples
  const auto size_of = [&](std::size_t k) {
    return std::count_if(geq1.begin(), geq1.end(), [&](const auto& f) {
      return f.items.size() == k;
    });
  };
  CHECK(size_of(1) == 4);
  CHECK(size_of(2) == 5);
  CHECK(size_of(3) == 2);
}

TEST_CASE("max_len caps the itemset size") {
  const auto db = testing::derived_db();
  auto cfg = config_of(Threshold::absolute(1));
  cfg.max_len = 1;
  CHECK(mine_db(db, cfg).size() == 4);
  cfg.max_len = 2;
  CHECK(mine_db(db, cfg).size() == 9);
  cfg.max_len = 0;
  CHECK_THROWS_AS(mine_db(db, cfg), std::invalid_argument);
}

TEST_CASE("mine_frequent equals the oracle on random databases") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const GeneratorSpec spec{static_cast<std::uint32_t>(seed * 11 % 64),
                             static_cast<std::uint32_t>(1 + seed % 12),
                             Rational(1 + seed % 3, 4), 0xABCD + seed};
    const auto db = random_db(spec);
    for (const auto cmp : {Compare::geq, Compare::gt}) {
      for (const auto& threshold :
           {Threshold::absolute(1), Threshold::absolute(3),
            Threshold::relative(Rational(1, 10)),
            Threshold::relative(Rational(1, 2))}) {
        auto cfg = config_of(threshold, cmp);
        const auto expected = brute_force_mine(db, cfg);
        CHECK(mine_db(db, cfg) == expected);
        cfg.representation = Representation::sparse;
        CHECK(mine_db(db, cfg) == expected);
        ++compared;
      }
    }
  }
  CHECK(compared == 200);
}

TEST_CASE("output is downward closed") {
  const GeneratorSpec spec{48, 9, Rational(2, 5), 31415};
  const auto db = random_db(spec);
  const auto mined = mine_db(db, config_of(Threshold::absolute(2)));
  std::set<std::vector<std::uint32_t>> reported;
  for (const auto& f : mined) reported.insert(f.items);
  for (const auto& f : mined) {
    if (f.items.size() < 2) continue;
    for (std::size_t drop = 0; drop < f.items.size(); ++drop) {
      auto subset = f.items;
      subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(reported.count(subset) == 1);
    }
  }
}

TEST_CASE("processing order does not change the result") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GeneratorSpec spec{50, 10, Rational(3, 10), 555 + seed};
    const auto db = random_db(spec);
    auto by_id = config_of(Threshold::absolute(2));
    by_id.order = ItemOrder::item_id;
    auto by_support = by_id;
    by_support.order = ItemOrder::ascending_support;
    CHECK(mine_db(db, by_id) == mine_db(db, by_support));
  }
}

TEST_CASE("raising the threshold never adds itemsets") {
  const GeneratorSpec spec{60, 10, Rational(3, 10), 777};
  const auto db = random_db(spec);
  std::vector<FrequentItemset> previous;
  bool first = true;
  for (std::uint64_t theta = 1; theta <= 8; ++theta) {
    const auto current = mine_db(db, config_of(Threshold::absolute(theta)));
    if (!first) {
      std::set<std::vector<std::uint32_t>> prev_sets;
      for (const auto& f : previous) prev_sets.insert(f.items);
      for (const auto& f : current) CHECK(prev_sets.count(f.items) == 1);
      CHECK(current.size() <= previous.size());
    }
    previous = current;
    first = false;
  }
}

TEST_CASE("generate_rules computes exact confidence and lift") {
  const auto db = testing::derived_db();
  const auto frequent = mine_db(db, config_of(Threshold::absolute(2)));
  const auto rules = generate_rules(frequent, Rational(1, 2));
  REQUIRE(rules.size() == 4);

  // a -> b
  CHECK(rules[0].antecedent == std::vector<std::uint32_t>{0});
  CHECK(rules[0].consequent == std::vector<std::uint32_t>{1});
  CHECK(rules[0].support == 3);
  CHECK(rules[0].confidence == Rational(3, 4));
  CHECK(rules[0].lift == Rational(15, 16));
  // b -> a mirrors the confidence
  CHECK(rules[1].confidence == Rational(3, 4));
  // a -> c sits exactly on the 0.5 cutoff and is kept under GEQ
  CHECK(rules[2].antecedent == std::vector<std::uint32_t>{0});
  CHECK(rules[2].consequent == std::vector<std::uint32_t>{2});
  CHECK(rules[2].confidence == Rational(1, 2));
  // c -> a is certain
  CHECK(rules[3].antecedent == std::vector<std::uint32_t>{2});
  CHECK(rules[3].confidence == Rational(1, 1));
  CHECK(rules[3].lift == Rational(5, 4));
}

TEST_CASE("a confidence cutoff above one matches nothing") {
  const auto db = testing::derived_db();
  const auto frequent = mine_db(db, config_of(Threshold::absolute(2)));
  CHECK(generate_rules(frequent, Rational(11, 10)).empty());
}

TEST_CASE("rules demand a downward-closed input") {
  const auto db = testing::derived_db();
  auto frequent = mine_db(db, config_of(Threshold::absolute(2)));
  // drop the {b} singleton that a->b needs for its lift
  std::erase_if(frequent, [](const FrequentItemset& f) {
    return f.items == std::vector<std::uint32_t>{1};
  });
  CHECK_THROWS_AS(generate_rules(frequent, Rational(1, 2)), MissingSubsetError);
}

TEST_CASE("rule identity: lift equals confidence scaled by consequent support") {
  const GeneratorSpec spec{40, 8, Rational(2, 5), 90210};
  const auto db = random_db(spec);
  const auto frequent = mine_db(db, config_of(Threshold::absolute(2)));
  const auto rules = generate_rules(frequent, Rational(0, 1));
  std::map<std::vector<std::uint32_t>, std::uint64_t> support;
  for (const auto& f : frequent) support[f.items] = f.support;
  for (const auto& r : rules) {
    const auto sb = support.at(r.consequent);
    CHECK(r.lift == r.confidence * Rational(static_cast<std::int64_t>(r.db_rows),
                                            static_cast<std::int64_t>(sb)));
    CHECK(r.confidence > Rational(0, 1));
    CHECK(r.confidence <= Rational(1, 1));
    CHECK(r.lift > Rational(0, 1));
  }
}

TEST_CASE("summarize_run aggregates exactly") {
  const auto db = testing::derived_db();
  const auto cfg = config_of(Threshold::absolute(2));
  const auto matrix = BitMatrix::build(db, Representation::dense);
  const auto frequent = mine_frequent(matrix, cfg);
  const auto summary =
      summarize_run(frequent, cfg, std::chrono::duration<double>(0.25), matrix);
  CHECK(summary.n_used == 5);
  CHECK(summary.frequent_count == 5);
  REQUIRE(summary.avg_relative_support.has_value());
  CHECK(*summary.avg_relative_support == Rational(3, 5));  // 15/25
  CHECK(summary.avg_relative_support->to_decimal() == "0.600000");
  CHECK(summary.elapsed_seconds == 0.25);
  CHECK(summary.memory_bytes == 32);
  CHECK(summary.threshold_echo == "abs:2,geq");

  const auto nothing = summarize_run(
      {}, config_of(Threshold::absolute(9), Compare::gt),
      std::chrono::duration<double>(0.0), matrix);
  CHECK(nothing.frequent_count == 0);
  CHECK_FALSE(nothing.avg_relative_support.has_value());
}

TEST_CASE("average relative support respects a GEQ relative threshold") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GeneratorSpec spec{30, 8, Rational(2, 5), seed * 7 + 1};
    const auto db = random_db(spec);
    const Rational r(1, 5);
    const auto cfg = config_of(Threshold::relative(r));
    const auto matrix = BitMatrix::build(db, Representation::dense);
    const auto frequent = mine_frequent(matrix, cfg);
    const auto summary = summarize_run(frequent, cfg,
                                       std::chrono::duration<double>(0), matrix);
    if (summary.frequent_count > 0) {
      CHECK(*summary.avg_relative_support >= r);
    }
  }
}
