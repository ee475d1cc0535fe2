#include "bitminer/partition.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "bitminer/errors.hpp"

namespace bitminer {

PartitionPlan PartitionPlan::make(std::uint32_t rows, std::uint32_t k) {
  if (k == 0) {
    throw InvalidPartitionError("partition count must be >= 1");
  }
  PartitionPlan plan;
  plan.ranges.reserve(k);
  const std::uint32_t base = rows / k;
  const std::uint32_t extra = rows % k;
  std::uint32_t begin = 0;
  for (std::uint32_t p = 0; p < k; ++p) {
    const std::uint32_t size = base + (p < extra ? 1 : 0);
    plan.ranges.push_back(Range{begin, begin + size});
    begin += size;
  }
  return plan;
}

std::vector<FrequentItemset> mine_partitioned(const BitMatrix& matrix,
                                              const MiningConfig& config,
                                              std::uint32_t partitions) {
  const PartitionPlan plan = PartitionPlan::make(matrix.rows(), partitions);
  const std::uint64_t n = matrix.rows();

  if (partitions == 1 || n == 0 || matrix.columns() == 0) {
    return mine_frequent(matrix, config);
  }
  // An absolute bound above n can never be met; bail before the fraction
  // count/n would leave [0, 1].
  if (!config.threshold.is_relative() && config.threshold.count() > n) {
    return {};
  }

  MiningConfig local = config;
  if (!config.threshold.is_relative()) {
    local.threshold = Threshold::relative(
        Rational(static_cast<std::int64_t>(config.threshold.count()),
                 static_cast<std::int64_t>(n)));
  }

  // Phase 1: independent local mines over row slices.
  std::vector<std::vector<FrequentItemset>> locals(plan.ranges.size());
  const auto mine_one = [&](std::size_t p) {
    const auto& r = plan.ranges[p];
    locals[p] = mine_frequent(matrix.slice_rows(r.begin, r.end), local);
  };
  const unsigned workers = std::min<unsigned>(
      {std::max(1u, std::thread::hardware_concurrency()),
       static_cast<unsigned>(plan.ranges.size()), 16u});
  if (workers <= 1) {
    for (std::size_t p = 0; p < plan.ranges.size(); ++p) mine_one(p);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = cursor.fetch_add(1); p < plan.ranges.size();
             p = cursor.fetch_add(1)) {
          mine_one(p);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Phase 2: recount the candidate union globally.
  const auto cmp = [](const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
    return canonical_less(a, b);
  };
  std::set<std::vector<std::uint32_t>, decltype(cmp)> candidates(cmp);
  for (auto& part : locals) {
    for (auto& f : part) candidates.insert(std::move(f.items));
  }

  const SupportPredicate global = resolve_threshold(config, n);
  std::vector<FrequentItemset> out;
  for (const auto& items : candidates) {
    const std::uint64_t support = matrix.support_of(items);
    if (global(support)) {
      out.push_back(FrequentItemset{items, support, n});
    }
  }
  return out;  // set iteration order is already canonical
}

}  // namespace bitminer
