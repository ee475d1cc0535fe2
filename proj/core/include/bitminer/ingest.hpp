#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bitminer {

/// Item names interned to dense ids 0..m-1 in first-appearance order.
/// Names are compared byte-wise; trimming happens in the parser.
class ItemCatalog {
 public:
  /// Returns the existing id for `name` or assigns the next free one.
  std::uint32_t intern(std::string_view name);

  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(names_.size());
  }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool operator==(const ItemCatalog& other) const {
    return names_ == other.names_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct Eq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept {
      return a == b;
    }
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t, Hash, Eq> index_;
};

/// Ordered transactions over a shared catalog. Each transaction is a strictly
/// ascending item-id list. Immutable once built; safe to share read-only.
struct TransactionDatabase {
  ItemCatalog catalog;
  std::vector<std::vector<std::uint32_t>> transactions;

  std::size_t transaction_count() const noexcept { return transactions.size(); }
  std::uint32_t item_count() const noexcept { return catalog.size(); }

  bool operator==(const TransactionDatabase& other) const {
    return catalog == other.catalog && transactions == other.transactions;
  }
};

struct IngestStats {
  std::size_t blank_lines = 0;           // whitespace-only, silently dropped
  std::size_t separator_only_lines = 0;  // e.g. ",," -- dropped, worth a warning
};

/// Parses basket text: one transaction per line, comma-separated item names,
/// names trimmed of ASCII whitespace, duplicates within a line collapsed,
/// LF or CRLF line endings. Throws IngestError on invalid UTF-8.
TransactionDatabase parse_baskets(std::string_view text,
                                  IngestStats* stats = nullptr);
TransactionDatabase parse_baskets(std::istream& in, IngestStats* stats = nullptr);

/// Keeps the first min(limit, n) transactions; the catalog is untouched so
/// item ids stay comparable across truncations.
TransactionDatabase truncate_db(const TransactionDatabase& db,
                                std::size_t limit);

/// Inverse of parse_baskets for parsed databases: one line per transaction,
/// names joined by commas in ascending-id order.
void write_baskets(const TransactionDatabase& db, std::ostream& out);
std::string to_basket_text(const TransactionDatabase& db);

}  // namespace bitminer
