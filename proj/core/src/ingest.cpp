#include "bitminer/ingest.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "bitminer/errors.hpp"

namespace bitminer {

namespace {

constexpr std::string_view kTrimSet = " \t\v\f\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kTrimSet);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kTrimSet);
  return s.substr(first, last - first + 1);
}

/// Offset of the first byte that is not well-formed UTF-8 (rejects overlong
/// encodings, surrogates and values above U+10FFFF), or npos if clean.
std::size_t find_invalid_utf8(std::string_view s) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t len = s.size();
  std::size_t i = 0;
  while (i < len) {
    const unsigned char b0 = p[i];
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t need = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (b0 >= 0xC2 && b0 <= 0xDF) {
      need = 1;
    } else if (b0 == 0xE0) {
      need = 2;
      lo = 0xA0;
    } else if (b0 >= 0xE1 && b0 <= 0xEC) {
      need = 2;
    } else if (b0 == 0xED) {
      need = 2;
      hi = 0x9F;  // exclude UTF-16 surrogates
    } else if (b0 >= 0xEE && b0 <= 0xEF) {
      need = 2;
    } else if (b0 == 0xF0) {
      need = 3;
      lo = 0x90;
    } else if (b0 >= 0xF1 && b0 <= 0xF3) {
      need = 3;
    } else if (b0 == 0xF4) {
      need = 3;
      hi = 0x8F;  // cap at U+10FFFF
    } else {
      return i;
    }
    if (len - i <= need) return i;  // truncated sequence
    for (std::size_t k = 1; k <= need; ++k) {
      const unsigned char b = p[i + k];
      const unsigned char klo = (k == 1) ? lo : 0x80;
      const unsigned char khi = (k == 1) ? hi : 0xBF;
      if (b < klo || b > khi) return i + k;
    }
    i += need + 1;
  }
  return std::string_view::npos;
}

}  // namespace

std::uint32_t ItemCatalog::intern(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<std::uint32_t> ItemCatalog::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

TransactionDatabase parse_baskets(std::string_view text, IngestStats* stats) {
  if (const auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw IngestError("invalid UTF-8", bad);
  }

  TransactionDatabase db;
  IngestStats local;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    if (nl == std::string_view::npos && line.empty()) break;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::uint32_t> tx;
    bool saw_separator = false;
    std::size_t field = 0;
    while (field <= line.size()) {
      const auto comma = line.find(',', field);
      const std::string_view raw = (comma == std::string_view::npos)
                                       ? line.substr(field)
                                       : line.substr(field, comma - field);
      if (comma != std::string_view::npos) saw_separator = true;
      const auto name = trim(raw);
      if (!name.empty()) tx.push_back(db.catalog.intern(name));
      if (comma == std::string_view::npos) break;
      field = comma + 1;
    }

    if (tx.empty()) {
      if (saw_separator) {
        ++local.separator_only_lines;
      } else {
        ++local.blank_lines;
      }
    } else {
      std::sort(tx.begin(), tx.end());
      tx.erase(std::unique(tx.begin(), tx.end()), tx.end());
      db.transactions.push_back(std::move(tx));
    }

    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (stats) *stats = local;
  return db;
}

TransactionDatabase parse_baskets(std::istream& in, IngestStats* stats) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_baskets(std::string_view(buffer.view()), stats);
}

TransactionDatabase truncate_db(const TransactionDatabase& db,
                                std::size_t limit) {
  TransactionDatabase out;
  out.catalog = db.catalog;
  const std::size_t keep = std::min(limit, db.transactions.size());
  out.transactions.assign(db.transactions.begin(),
                          db.transactions.begin() +
                              static_cast<std::ptrdiff_t>(keep));
  return out;
}

void write_baskets(const TransactionDatabase& db, std::ostream& out) {
  for (const auto& tx : db.transactions) {
    for (std::size_t i = 0; i < tx.size(); ++i) {
      if (i) out << ',';
      out << db.catalog.name(tx[i]);
    }
    out << '\n';
  }
}

std::string to_basket_text(const TransactionDatabase& db) {
  std::ostringstream out;
  write_baskets(db, out);
  return out.str();
}

}  // namespace bitminer
