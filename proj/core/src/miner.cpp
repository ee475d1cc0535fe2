#include "bitminer/miner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "bitminer/errors.hpp"

namespace bitminer {

Threshold Threshold::absolute(std::uint64_t count) {
  return Threshold(false, count, Rational());
}

Threshold Threshold::relative(Rational fraction) {
  if (fraction < Rational(0, 1) || fraction > Rational(1, 1)) {
    throw std::invalid_argument("relative threshold must lie in [0, 1]");
  }
  return Threshold(true, 0, fraction);
}

std::string Threshold::to_string() const {
  if (!relative_) return "abs:" + std::to_string(count_);
  return "rel:" + std::to_string(fraction_.num()) + "/" +
         std::to_string(fraction_.den());
}

SupportPredicate resolve_threshold(const MiningConfig& config, std::uint64_t n) {
  std::uint64_t min_support;
  if (config.threshold.is_relative()) {
    const auto num =
        static_cast<unsigned __int128>(config.threshold.fraction().num());
    const auto den =
        static_cast<unsigned __int128>(config.threshold.fraction().den());
    const unsigned __int128 target = num * n;
    // GEQ: support*den >= num*n  <=>  support >= ceil(num*n/den)
    // GT:  support*den >  num*n  <=>  support >= floor(num*n/den) + 1
    const unsigned __int128 bound = (config.compare == Compare::geq)
                                        ? (target + den - 1) / den
                                        : target / den + 1;
    min_support = static_cast<std::uint64_t>(bound);
  } else {
    const std::uint64_t count = config.threshold.count();
    if (config.compare == Compare::geq) {
      min_support = count;
    } else {
      min_support = (count == std::numeric_limits<std::uint64_t>::max())
                        ? count
                        : count + 1;
    }
  }
  return SupportPredicate{std::max<std::uint64_t>(min_support, 1)};
}

bool canonical_less(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool canonical_less(const FrequentItemset& a, const FrequentItemset& b) noexcept {
  return canonical_less(a.items, b.items);
}

namespace {

struct Seed {
  std::uint32_t item;
  std::uint64_t support;
};

class PrefixMiner {
 public:
  PrefixMiner(const BitMatrix& matrix, SupportPredicate pred,
              std::uint32_t max_len, std::vector<FrequentItemset>& out)
      : matrix_(matrix), pred_(pred), max_len_(max_len), out_(out) {}

  void run(const std::vector<Seed>& seeds) {
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      prefix_.assign(1, seeds[i].item);
      report(seeds[i].support);
      if (max_len_ > 1) grow(matrix_.column(seeds[i].item), seeds, i + 1);
    }
  }

 private:
  void grow(const BitColumn& prefix_col, const std::vector<Seed>& seeds,
            std::size_t from) {
    for (std::size_t i = from; i < seeds.size(); ++i) {
      BitColumn extended = intersect(prefix_col, matrix_.column(seeds[i].item));
      const std::uint64_t support = extended.popcount();
      if (!pred_(support)) continue;
      prefix_.push_back(seeds[i].item);
      report(support);
      if (prefix_.size() < max_len_) grow(extended, seeds, i + 1);
      prefix_.pop_back();
    }
  }

  void report(std::uint64_t support) {
    std::vector<std::uint32_t> items(prefix_);
    std::sort(items.begin(), items.end());
    out_.push_back(FrequentItemset{std::move(items), support, matrix_.rows()});
  }

  const BitMatrix& matrix_;
  SupportPredicate pred_;
  std::uint32_t max_len_;
  std::vector<FrequentItemset>& out_;
  std::vector<std::uint32_t> prefix_;
};

}  // namespace

std::vector<FrequentItemset> mine_frequent(const BitMatrix& matrix,
                                           const MiningConfig& config) {
  if (config.max_len && *config.max_len == 0) {
    throw std::invalid_argument("max_len must be >= 1 when set");
  }
  const SupportPredicate pred = resolve_threshold(config, matrix.rows());
  const std::uint32_t max_len =
      config.max_len.value_or(std::numeric_limits<std::uint32_t>::max());

  std::vector<Seed> seeds;
  for (std::uint32_t item = 0; item < matrix.columns(); ++item) {
    const std::uint64_t support = matrix.column(item).popcount();
    if (pred(support)) seeds.push_back(Seed{item, support});
  }
  if (config.order == ItemOrder::ascending_support) {
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) {
                       if (a.support != b.support) return a.support < b.support;
                       return a.item < b.item;
                     });
  }

  std::vector<FrequentItemset> out;
  PrefixMiner(matrix, pred, max_len, out).run(seeds);
  std::sort(out.begin(), out.end(),
            [](const FrequentItemset& a, const FrequentItemset& b) {
              return canonical_less(a, b);
            });
  return out;
}

std::vector<AssociationRule> generate_rules(
    const std::vector<FrequentItemset>& frequent,
    const Rational& min_confidence) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> support;
  for (const auto& f : frequent) support.emplace(f.items, f.support);

  const auto support_of = [&](const std::vector<std::uint32_t>& items) {
    const auto it = support.find(items);
    if (it == support.end()) {
      throw MissingSubsetError(
          "input is not downward closed: missing subset of size " +
          std::to_string(items.size()));
    }
    return it->second;
  };

  std::vector<const FrequentItemset*> ordered;
  ordered.reserve(frequent.size());
  for (const auto& f : frequent) ordered.push_back(&f);
  std::sort(ordered.begin(), ordered.end(),
            [](const FrequentItemset* a, const FrequentItemset* b) {
              return canonical_less(*a, *b);
            });

  std::vector<AssociationRule> out;
  for (const FrequentItemset* f : ordered) {
    const std::size_t z = f->items.size();
    if (z < 2) continue;
    if (z > 63) {
      throw std::length_error("rule enumeration over itemsets wider than 63");
    }

    std::vector<AssociationRule> local;
    const std::uint64_t full = (std::uint64_t{1} << z) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<std::uint32_t> antecedent, consequent;
      for (std::size_t bit = 0; bit < z; ++bit) {
        ((mask >> bit) & 1 ? antecedent : consequent).push_back(f->items[bit]);
      }
      const std::uint64_t sa = support_of(antecedent);
      const Rational confidence(static_cast<std::int64_t>(f->support),
                                static_cast<std::int64_t>(sa));
      if (confidence < min_confidence) continue;
      const std::uint64_t sb = support_of(consequent);
      const Rational lift(
          static_cast<std::int64_t>(f->support * f->db_rows),
          static_cast<std::int64_t>(sa * sb));
      local.push_back(AssociationRule{std::move(antecedent),
                                      std::move(consequent), f->support,
                                      f->db_rows, confidence, lift});
    }
    std::sort(local.begin(), local.end(),
              [](const AssociationRule& a, const AssociationRule& b) {
                return canonical_less(a.antecedent, b.antecedent);
              });
    out.insert(out.end(), std::make_move_iterator(local.begin()),
               std::make_move_iterator(local.end()));
  }
  return out;
}

RunSummary summarize_run(const std::vector<FrequentItemset>& frequent,
                         const MiningConfig& config,
                         std::chrono::duration<double> elapsed,
                         const BitMatrix& matrix) {
  RunSummary summary;
  summary.n_used = matrix.rows();
  summary.threshold_echo = config.threshold.to_string() +
                           (config.compare == Compare::geq ? ",geq" : ",gt");
  summary.frequent_count = frequent.size();
  if (!frequent.empty()) {
    std::uint64_t total = 0;
    for (const auto& f : frequent) total += f.support;
    summary.avg_relative_support =
        Rational(static_cast<std::int64_t>(total),
                 static_cast<std::int64_t>(frequent.size() * matrix.rows()));
  }
  summary.elapsed_seconds = elapsed.count();
  summary.memory_bytes = matrix.estimate_memory();
  return summary;
}

}  // namespace bitminer
