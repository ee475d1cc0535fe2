// bitminer: frequent itemset and association rule mining over packed
// Boolean occurrence matrices. Subcommands: mine, rules, bench.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 invalid flags,
// 3 internal invariant violation.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bitminer/errors.hpp"
#include "bitminer/format.hpp"
#include "bitminer/ingest.hpp"
#include "bitminer/miner.hpp"
#include "bitminer/oracle.hpp"
#include "bitminer/partition.hpp"

namespace {

using namespace bitminer;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MineOpts {
  std::string input;
  std::string min_support;
  std::string compare = "geq";
  std::string repr = "dense";
  std::string format = "csv";
  std::string min_confidence = "0.5";  // rules only
  std::optional<std::uint32_t> max_len;
  std::uint32_t partitions = 1;
  std::optional<std::uint64_t> limit;
};

struct BenchOpts {
  std::string input;
  std::string synthetic;  // "N:M:DENSITY", alternative to a basket file
  std::uint64_t seed = 0;
  std::string thresholds = "1%,2%,3%,4%,5%";
  std::string limits = "2000,4000,6000,8000,10000";
  std::uint32_t repeat = 3;
  std::string compare = "geq";
  std::string repr = "dense";
  std::uint32_t partitions = 1;
  std::optional<std::uint32_t> max_len;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = (comma == std::string_view::npos)
                           ? text.substr(pos)
                           : text.substr(pos, comma - pos);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint64_t parse_count(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string("bad ") + what + ": '" + std::string(text) +
                     "'");
  }
  return value;
}

Representation parse_repr(const std::string& name) {
  return name == "sparse" ? Representation::sparse : Representation::dense;
}

MiningConfig build_config(const std::string& min_support,
                          const std::string& compare, const std::string& repr,
                          const std::optional<std::uint32_t>& max_len) {
  MiningConfig cfg;
  try {
    cfg.threshold = parse_threshold(min_support);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--min-support: ") + e.what());
  }
  cfg.compare = compare == "gt" ? Compare::gt : Compare::geq;
  cfg.representation = parse_repr(repr);
  cfg.max_len = max_len;
  return cfg;
}

TransactionDatabase load_baskets(const std::string& path, IngestStats* stats) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError("not a readable file: '" + path + "'");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_baskets(in, stats);
}

void report_skipped(const IngestStats& stats) {
  if (stats.separator_only_lines > 0) {
    std::fprintf(stderr, "warning: skipped %zu separator-only line(s)\n",
                 stats.separator_only_lines);
  }
}

struct MinedRun {
  TransactionDatabase db;
  BitMatrix matrix;
  std::vector<FrequentItemset> frequent;
  std::chrono::duration<double> elapsed;
};

MinedRun execute_mine(TransactionDatabase db, const MiningConfig& cfg,
                      std::uint32_t partitions) {
  const auto start = Clock::now();
  BitMatrix matrix = BitMatrix::build(db, cfg.representation);
  auto frequent = partitions > 1 ? mine_partitioned(matrix, cfg, partitions)
                                 : mine_frequent(matrix, cfg);
  return MinedRun{std::move(db), std::move(matrix), std::move(frequent),
                  Clock::now() - start};
}

int run_mine(const MineOpts& o, bool emit_rules_instead) {
  const MiningConfig cfg =
      build_config(o.min_support, o.compare, o.repr, o.max_len);
  const OutputFormat fmt =
      o.format == "json" ? OutputFormat::json : OutputFormat::csv;
  Rational min_confidence;
  if (emit_rules_instead) {
    try {
      min_confidence = parse_fraction(o.min_confidence);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--min-confidence: ") + e.what());
    }
  }

  IngestStats stats;
  auto db = load_baskets(o.input, &stats);
  if (o.limit) db = truncate_db(db, *o.limit);
  report_skipped(stats);

  const MinedRun run = execute_mine(std::move(db), cfg, o.partitions);
  std::string body;
  std::string extra;
  if (emit_rules_instead) {
    const auto rules = generate_rules(run.frequent, min_confidence);
    body = emit_rules(rules, run.db.catalog, fmt);
    extra = " rules=" + std::to_string(rules.size());
  } else {
    body = emit_itemsets(run.frequent, run.db.catalog, fmt);
  }
  std::fwrite(body.data(), 1, body.size(), stdout);

  const auto summary = summarize_run(run.frequent, cfg, run.elapsed, run.matrix);
  std::fprintf(stderr, "%s%s\n", render_summary(summary).c_str(), extra.c_str());
  return 0;
}

GeneratorSpec parse_synthetic(const std::string& text, std::uint64_t seed) {
  const auto c1 = text.find(':');
  const auto c2 = (c1 == std::string::npos) ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw UsageError("--synthetic expects N:M:DENSITY, e.g. 5000:100:3%");
  }
  GeneratorSpec spec;
  spec.transactions = static_cast<std::uint32_t>(
      parse_count(std::string_view(text).substr(0, c1), "transaction count"));
  spec.items = static_cast<std::uint32_t>(parse_count(
      std::string_view(text).substr(c1 + 1, c2 - c1 - 1), "item count"));
  try {
    spec.density = parse_fraction(std::string_view(text).substr(c2 + 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--synthetic density: ") + e.what());
  }
  if (spec.density > Rational(1, 1)) {
    throw UsageError("--synthetic density must lie in [0, 1]");
  }
  spec.seed = seed;
  return spec;
}

double median_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return (samples[mid - 1] + samples[mid]) / 2.0;
}

int run_bench(const BenchOpts& o) {
  if (o.input.empty() == o.synthetic.empty()) {
    throw UsageError("bench needs exactly one input: a basket file or --synthetic");
  }

  std::vector<Threshold> thresholds;
  for (const auto& piece : split_list(o.thresholds)) {
    try {
      thresholds.push_back(parse_threshold(piece));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--thresholds: ") + e.what());
    }
  }
  std::vector<std::uint64_t> limits;
  for (const auto& piece : split_list(o.limits)) {
    limits.push_back(parse_count(piece, "limit"));
  }
  if (thresholds.empty() || limits.empty()) {
    throw UsageError("empty bench sweep");
  }
  const Representation repr = parse_repr(o.repr);
  const Compare compare = o.compare == "gt" ? Compare::gt : Compare::geq;
  const GeneratorSpec synthetic =
      o.synthetic.empty() ? GeneratorSpec{} : parse_synthetic(o.synthetic, o.seed);

  IngestStats stats;
  const TransactionDatabase db = o.synthetic.empty()
                                     ? load_baskets(o.input, &stats)
                                     : random_db(synthetic);
  report_skipped(stats);

  std::string out = bench_header();
  std::fwrite(out.data(), 1, out.size(), stdout);
  for (const auto limit : limits) {
    const auto limited = truncate_db(db, limit);
    for (const auto& threshold : thresholds) {
      MiningConfig cfg;
      cfg.threshold = threshold;
      cfg.compare = compare;
      cfg.representation = repr;
      cfg.max_len = o.max_len;

      std::vector<double> times;
      BenchRow row;
      row.threshold = threshold;
      for (std::uint32_t rep = 0; rep < o.repeat; ++rep) {
        const MinedRun run = execute_mine(limited, cfg, o.partitions);
        times.push_back(run.elapsed.count());
        if (rep == 0) {
          row.transactions = run.matrix.rows();
          row.frequent_itemsets = run.frequent.size();
          row.memory_bytes = run.matrix.estimate_memory();
          if (!run.frequent.empty()) {
            std::uint64_t total = 0;
            for (const auto& f : run.frequent) total += f.support;
            row.avg_support = Rational(
                static_cast<std::int64_t>(total),
                static_cast<std::int64_t>(run.frequent.size() * run.matrix.rows()));
          }
        }
      }
      row.median_seconds = median_of(std::move(times));
      const auto rendered = emit_bench_row(row);
      std::fwrite(rendered.data(), 1, rendered.size(), stdout);
    }
  }
  return 0;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const IngestError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent itemset mining over packed Boolean matrix columns"};
  app.require_subcommand(1);

  MineOpts mine_opts;
  BenchOpts bench_opts;

  const auto add_common = [](CLI::App* cmd, MineOpts& o) {
    cmd->add_option("input", o.input, "basket file: one transaction per line, comma-separated items")
        ->required();
    cmd->add_option("--min-support", o.min_support,
                    "frequency threshold: 1%, 0.01, 1/100 or abs:50")
        ->required();
    cmd->add_option("--compare", o.compare, "threshold comparison (default geq)")
        ->check(CLI::IsMember({"geq", "gt"}));
    cmd->add_option("--max-len", o.max_len, "largest itemset size to report")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--repr", o.repr, "column representation (default dense)")
        ->check(CLI::IsMember({"dense", "sparse"}));
    cmd->add_option("--partitions", o.partitions,
                    "two-phase partitioned mining over K row blocks (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--limit-transactions", o.limit,
                    "mine only the first N transactions");
    cmd->add_option("--format", o.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* mine = app.add_subcommand("mine", "Mine frequent itemsets");
  add_common(mine, mine_opts);

  auto* rules = app.add_subcommand("rules", "Mine association rules");
  add_common(rules, mine_opts);
  rules
      ->add_option("--min-confidence", mine_opts.min_confidence,
                   "confidence cutoff, e.g. 0.5 or 50% (default 0.5)");

  auto* bench = app.add_subcommand(
      "bench", "Sweep thresholds and transaction limits, print one CSV row per pair");
  bench->add_option("input", bench_opts.input, "basket file to sweep");
  auto* synthetic_opt =
      bench
          ->add_option("--synthetic", bench_opts.synthetic,
                       "generate input instead: N:M:DENSITY, e.g. 5000:100:3%")
          ->excludes("input");
  bench->add_option("--seed", bench_opts.seed, "seed for --synthetic (default 0)")
      ->needs(synthetic_opt);
  bench->add_option("--thresholds", bench_opts.thresholds,
                    "comma-separated sweep thresholds (default 1%..5%)");
  bench->add_option("--limits", bench_opts.limits,
                    "comma-separated transaction limits (default 2000..10000)");
  bench->add_option("--repeat", bench_opts.repeat,
                    "timing repetitions per pair, median reported (default 3)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--compare", bench_opts.compare, "threshold comparison")
      ->check(CLI::IsMember({"geq", "gt"}));
  bench->add_option("--repr", bench_opts.repr, "column representation")
      ->check(CLI::IsMember({"dense", "sparse"}));
  bench->add_option("--partitions", bench_opts.partitions, "partition count")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-len", bench_opts.max_len, "largest itemset size")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (mine->parsed()) {
    return guarded([&] { return run_mine(mine_opts, false); });
  }
  if (rules->parsed()) {
    return guarded([&] { return run_mine(mine_opts, true); });
  }
  return guarded([&] { return run_bench(bench_opts); });
}
