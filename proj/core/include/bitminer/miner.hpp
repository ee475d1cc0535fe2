#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitminer/bitmatrix.hpp"
#include "bitminer/rational.hpp"

namespace bitminer {

enum class Compare { geq, gt };
enum class ItemOrder { item_id, ascending_support };

/// Minimum-support threshold: an absolute transaction count or an exact
/// relative fraction of the database size.
class Threshold {
 public:
  Threshold() : Threshold(Threshold::absolute(1)) {}

  static Threshold absolute(std::uint64_t count);
  /// Requires 0 <= fraction <= 1; throws std::invalid_argument otherwise.
  static Threshold relative(Rational fraction);

  bool is_relative() const noexcept { return relative_; }
  std::uint64_t count() const noexcept { return count_; }
  const Rational& fraction() const noexcept { return fraction_; }

  std::string to_string() const;  // "abs:2" or "rel:1/100"

 private:
  Threshold(bool relative, std::uint64_t count, Rational fraction)
      : relative_(relative), count_(count), fraction_(fraction) {}

  bool relative_ = false;
  std::uint64_t count_ = 1;
  Rational fraction_;
};

struct MiningConfig {
  Threshold threshold;
  Compare compare = Compare::geq;
  std::optional<std::uint32_t> max_len;  // itemset size cap, >= 1 when present
  Representation representation = Representation::dense;
  ItemOrder order = ItemOrder::item_id;
};

/// The threshold predicate reduced to one exact minimum count. The reduction
/// uses integer ceiling/floor arithmetic, which is equivalent to comparing
/// support*den against num*n by cross-multiplication. min_support is clamped
/// to >= 1: an itemset must occur at least once to be reported, whatever the
/// threshold (keeps zero-support branches out of the search).
struct SupportPredicate {
  std::uint64_t min_support = 1;
  bool operator()(std::uint64_t support) const noexcept {
    return support >= min_support;
  }
};

SupportPredicate resolve_threshold(const MiningConfig& config, std::uint64_t n);

struct FrequentItemset {
  std::vector<std::uint32_t> items;  // strictly ascending ids
  std::uint64_t support = 0;         // absolute count
  std::uint64_t db_rows = 0;         // database size backing the count

  Rational relative_support() const {
    return Rational(static_cast<std::int64_t>(support),
                    static_cast<std::int64_t>(db_rows));
  }
  bool operator==(const FrequentItemset&) const = default;
};

/// Canonical report order: itemset size ascending, then lexicographic by ids.
bool canonical_less(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) noexcept;
bool canonical_less(const FrequentItemset& a, const FrequentItemset& b) noexcept;

/// Depth-first prefix-extension mining over matrix columns.
///
/// Every frequent prefix keeps its materialized AND column; extending by a
/// later item in the processing order costs one column intersection plus a
/// popcount, so no candidate generation pass or candidate storage exists.
/// Output is canonically sorted and independent of the processing order.
std::vector<FrequentItemset> mine_frequent(const BitMatrix& matrix,
                                           const MiningConfig& config);

struct AssociationRule {
  std::vector<std::uint32_t> antecedent;  // non-empty, ascending
  std::vector<std::uint32_t> consequent;  // non-empty, ascending, disjoint
  std::uint64_t support = 0;              // of antecedent ∪ consequent
  std::uint64_t db_rows = 0;
  Rational confidence;  // support(A∪B) / support(A)
  Rational lift;        // confidence / (support(B)/n)

  bool operator==(const AssociationRule&) const = default;
};

/// Emits A -> Z\A for every frequent Z with |Z| >= 2 and every non-empty
/// proper subset A whose confidence reaches min_confidence. `frequent` must
/// be the complete downward-closed miner output; a missing subset support
/// raises MissingSubsetError. Rules are ordered by the underlying itemset
/// (canonical order), then by antecedent (canonical order).
std::vector<AssociationRule> generate_rules(
    const std::vector<FrequentItemset>& frequent,
    const Rational& min_confidence);

struct RunSummary {
  std::uint64_t n_used = 0;
  std::string threshold_echo;  // e.g. "abs:2,geq"
  std::uint64_t frequent_count = 0;
  std::optional<Rational> avg_relative_support;  // absent when count == 0
  double elapsed_seconds = 0.0;
  std::uint64_t memory_bytes = 0;
};

RunSummary summarize_run(const std::vector<FrequentItemset>& frequent,
                         const MiningConfig& config,
                         std::chrono::duration<double> elapsed,
                         const BitMatrix& matrix);

}  // namespace bitminer
