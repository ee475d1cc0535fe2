#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitminer/miner.hpp"

namespace bitminer {

enum class OutputFormat { csv, json };

/// Parses a minimum-support flag value. "abs:50" is an absolute count;
/// "1%", "2.5%", "0.01" and "1/100" are exact relative fractions, which must
/// lie in [0, 1]. Throws std::invalid_argument on bad syntax or range.
Threshold parse_threshold(std::string_view text);

/// Parses "1%", "0.5", "3/4" into an exact non-negative rational. No upper
/// bound: confidence cutoffs above 1 are legal and simply match nothing.
Rational parse_fraction(std::string_view text);

/// Itemset report. CSV carries a "items,support,relative_support" header and
/// renders names joined by ';'; JSON emits one object per line with keys
/// items/support/relative_support. Fractions are fixed 6-decimal,
/// round-half-even. Identical inputs produce byte-identical output.
std::string emit_itemsets(const std::vector<FrequentItemset>& itemsets,
                          const ItemCatalog& catalog, OutputFormat format);

/// Rule report: CSV header "antecedent,consequent,support,confidence,lift";
/// JSON keys antecedent/consequent/support/confidence/lift.
std::string emit_rules(const std::vector<AssociationRule>& rules,
                       const ItemCatalog& catalog, OutputFormat format);

struct BenchRow {
  Threshold threshold;
  std::uint64_t transactions = 0;
  double median_seconds = 0.0;
  std::uint64_t frequent_itemsets = 0;
  std::optional<Rational> avg_support;
  std::uint64_t memory_bytes = 0;
};

std::string bench_header();
std::string emit_bench_row(const BenchRow& row);

/// One-line human-readable run report for the diagnostic stream.
std::string render_summary(const RunSummary& summary);

}  // namespace bitminer
