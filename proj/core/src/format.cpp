#include "bitminer/format.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace bitminer {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || value < 0) {
    throw std::invalid_argument(std::string("expected a non-negative integer ") +
                                what + ": '" + std::string(text) + "'");
  }
  return value;
}

/// "12", "0.5", "12.25" -> exact rational; at most 12 fractional digits.
Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    return Rational(parse_int(text, "value"), 1);
  }
  const auto whole_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 12) {
    throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
  }
  const std::int64_t whole = whole_part.empty() ? 0 : parse_int(whole_part, "value");
  const std::int64_t frac = parse_int(frac_part, "value");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const __int128 num = static_cast<__int128>(whole) * scale + frac;
  if (num > INT64_MAX) {
    throw std::invalid_argument("decimal out of range: '" + std::string(text) + "'");
  }
  return Rational(static_cast<std::int64_t>(num), scale);
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_names_joined(std::string& out,
                         const std::vector<std::uint32_t>& items,
                         const ItemCatalog& catalog) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ';';
    out += catalog.name(items[i]);
  }
}

void append_json_names(std::string& out,
                       const std::vector<std::uint32_t>& items,
                       const ItemCatalog& catalog) {
  out += '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    append_json_string(out, catalog.name(items[i]));
  }
  out += ']';
}

}  // namespace

Threshold parse_threshold(std::string_view text) {
  constexpr std::string_view kAbsPrefix = "abs:";
  if (text.substr(0, kAbsPrefix.size()) == kAbsPrefix) {
    const auto count = parse_int(text.substr(kAbsPrefix.size()), "count");
    return Threshold::absolute(static_cast<std::uint64_t>(count));
  }
  const Rational fraction = parse_fraction(text);
  if (fraction > Rational(1, 1)) {
    throw std::invalid_argument("relative support must not exceed 100%: '" +
                                std::string(text) + "'");
  }
  return Threshold::relative(fraction);
}

Rational parse_fraction(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty fraction");
  }
  if (text.back() == '%') {
    const Rational percent = parse_decimal(text.substr(0, text.size() - 1));
    return percent / Rational(100, 1);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), "numerator");
    const std::int64_t den = parse_int(text.substr(slash + 1), "denominator");
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  return parse_decimal(text);
}

std::string emit_itemsets(const std::vector<FrequentItemset>& itemsets,
                          const ItemCatalog& catalog, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) {
    out += "items,support,relative_support\n";
    for (const auto& f : itemsets) {
      append_names_joined(out, f.items, catalog);
      out += ',';
      out += std::to_string(f.support);
      out += ',';
      out += f.relative_support().to_decimal();
      out += '\n';
    }
    return out;
  }
  for (const auto& f : itemsets) {
    out += "{\"items\":";
    append_json_names(out, f.items, catalog);
    out += ",\"support\":";
    out += std::to_string(f.support);
    out += ",\"relative_support\":";
    out += f.relative_support().to_decimal();
    out += "}\n";
  }
  return out;
}

std::string emit_rules(const std::vector<AssociationRule>& rules,
                       const ItemCatalog& catalog, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) {
    out += "antecedent,consequent,support,confidence,lift\n";
    for (const auto& r : rules) {
      append_names_joined(out, r.antecedent, catalog);
      out += ',';
      append_names_joined(out, r.consequent, catalog);
      out += ',';
      out += std::to_string(r.support);
      out += ',';
      out += r.confidence.to_decimal();
      out += ',';
      out += r.lift.to_decimal();
      out += '\n';
    }
    return out;
  }
  for (const auto& r : rules) {
    out += "{\"antecedent\":";
    append_json_names(out, r.antecedent, catalog);
    out += ",\"consequent\":";
    append_json_names(out, r.consequent, catalog);
    out += ",\"support\":";
    out += std::to_string(r.support);
    out += ",\"confidence\":";
    out += r.confidence.to_decimal();
    out += ",\"lift\":";
    out += r.lift.to_decimal();
    out += "}\n";
  }
  return out;
}

std::string bench_header() {
  return "support_threshold,transactions,median_seconds,frequent_itemsets,"
         "avg_support,memory_bytes\n";
}

std::string emit_bench_row(const BenchRow& row) {
  std::string out;
  out += row.threshold.is_relative() ? row.threshold.fraction().to_decimal()
                                     : row.threshold.to_string();
  out += ',';
  out += std::to_string(row.transactions);
  out += ',';
  out += fixed6(row.median_seconds);
  out += ',';
  out += std::to_string(row.frequent_itemsets);
  out += ',';
  if (row.avg_support) out += row.avg_support->to_decimal();
  out += ',';
  out += std::to_string(row.memory_bytes);
  out += '\n';
  return out;
}

std::string render_summary(const RunSummary& summary) {
  std::string out = "summary:";
  out += " n_used=" + std::to_string(summary.n_used);
  out += " threshold=" + summary.threshold_echo;
  out += " frequent_count=" + std::to_string(summary.frequent_count);
  out += " avg_support=";
  out += summary.avg_relative_support ? summary.avg_relative_support->to_decimal()
                                      : "n/a";
  out += " memory_bytes=" + std::to_string(summary.memory_bytes);
  out += " elapsed_seconds=" + fixed6(summary.elapsed_seconds);
  return out;
}

}  // namespace bitminer
