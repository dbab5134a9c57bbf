#include "genus_atlas/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "genus_atlas/errors.hpp"
#include "genus_atlas/finite_group.hpp"

namespace atlas {

namespace {

constexpr std::string_view kCoveredHeader = "#covered-orders:";
constexpr std::string_view kCountHeader = "#count:";

std::uint64_t parse_u64(std::string_view s, int line, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " \"" + std::string(s) + "\"", line);
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos)
      return parts;
    s.remove_prefix(pos + 1);
  }
}

std::set<std::uint64_t> parse_ranges(std::string_view text, int line) {
  std::set<std::uint64_t> orders;
  for (std::string_view part : split(text, ',')) {
    auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      orders.insert(parse_u64(part, line, "covered order"));
      continue;
    }
    std::uint64_t lo = parse_u64(part.substr(0, dash), line, "range start");
    std::uint64_t hi = parse_u64(part.substr(dash + 1), line, "range end");
    if (lo > hi || lo == 0)
      throw ParseError("bad range \"" + std::string(part) + "\"", line);
    for (std::uint64_t n = lo; n <= hi; ++n)
      orders.insert(n);
  }
  return orders;
}

std::string format_ranges(const std::set<std::uint64_t>& orders) {
  std::string out;
  for (auto it = orders.begin(); it != orders.end();) {
    std::uint64_t lo = *it;
    std::uint64_t hi = lo;
    for (++it; it != orders.end() && *it == hi + 1; ++it)
      hi = *it;
    if (!out.empty())
      out += ',';
    out += std::to_string(lo);
    if (hi > lo)
      out += "-" + std::to_string(hi);
  }
  return out;
}

CatalogRecord parse_record(std::string_view line, int line_no) {
  auto fields = split(line, ' ');
  if (fields.size() != 5)
    throw ParseError("expected 5 space-separated fields, got " + std::to_string(fields.size()),
                     line_no);
  CatalogRecord rec;
  rec.id.order = parse_u64(fields[0], line_no, "order");
  rec.id.index = parse_u64(fields[1], line_no, "index");
  if (rec.id.order == 0 || rec.id.index == 0)
    throw ParseError("order and index must be positive", line_no);
  rec.name = std::string(fields[2]);
  if (rec.name.empty())
    throw ParseError("empty group name", line_no);
  rec.degree = parse_u64(fields[3], line_no, "degree");
  if (rec.degree == 0)
    throw ParseError("degree must be positive", line_no);
  for (std::string_view gen : split(fields[4], ';')) {
    try {
      rec.generators.push_back(Permutation::from_cycles(gen, rec.degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return rec;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

Catalog::Catalog(CatalogManifest manifest, std::vector<CatalogRecord> records)
    : manifest_(std::move(manifest)), records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const CatalogRecord& a, const CatalogRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < records_.size(); ++i)
    if (records_[i].id == records_[i - 1].id)
      throw ParseError("duplicate group id [" + records_[i].id.to_string() + "]");
}

OrderQuery Catalog::groups_of_order(std::uint64_t n) const {
  if (!covers(n))
    return {{}, false};
  auto lo = std::lower_bound(records_.begin(), records_.end(), n,
                             [](const CatalogRecord& r, std::uint64_t v) { return r.id.order < v; });
  auto hi = std::upper_bound(records_.begin(), records_.end(), n,
                             [](std::uint64_t v, const CatalogRecord& r) { return v < r.id.order; });
  return {std::span<const CatalogRecord>(lo, hi), true};
}

const CatalogRecord* Catalog::find(GroupId id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const CatalogRecord& r, const GroupId& v) { return r.id < v; });
  if (it == records_.end() || it->id != id)
    return nullptr;
  return &*it;
}

const CatalogRecord* Catalog::find_by_name(std::string_view name) const {
  for (const auto& r : records_)
    if (r.name == name)
      return &r;
  return nullptr;
}

Catalog parse_catalog(std::istream& in) {
  CatalogManifest manifest;
  bool have_covered = false;
  std::vector<CatalogRecord> records;
  std::set<GroupId> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty())
      continue;
    if (line.starts_with(kCoveredHeader)) {
      manifest.covered_orders = parse_ranges(line.substr(kCoveredHeader.size()), line_no);
      have_covered = true;
      continue;
    }
    if (line.starts_with(kCountHeader)) {
      std::string_view body = line.substr(kCountHeader.size());
      auto eq = body.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("count line must read #count:<order>=<n>", line_no);
      manifest.expected_counts[parse_u64(body.substr(0, eq), line_no, "order")] =
          parse_u64(body.substr(eq + 1), line_no, "count");
      continue;
    }
    if (line.front() == '#')
      continue;
    CatalogRecord rec = parse_record(line, line_no);
    if (!seen.insert(rec.id).second)
      throw ParseError("duplicate group id [" + rec.id.to_string() + "]", line_no);
    records.push_back(std::move(rec));
  }
  if (!have_covered)
    throw ParseError("missing required #covered-orders: header");
  return Catalog(std::move(manifest), std::move(records));
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open catalog " + path.string());
  return parse_catalog(in);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::ostringstream out;
  out << kCoveredHeader << format_ranges(catalog.manifest().covered_orders) << '\n';
  for (const auto& [order, count] : catalog.manifest().expected_counts)
    out << kCountHeader << order << '=' << count << '\n';
  for (const auto& rec : catalog.records()) {
    out << rec.id.order << ' ' << rec.id.index << ' ' << rec.name << ' ' << rec.degree << ' ';
    for (std::size_t i = 0; i < rec.generators.size(); ++i)
      out << (i > 0 ? ";" : "") << rec.generators[i].to_cycles();
    out << '\n';
  }
  return out.str();
}

CatalogReport verify_catalog(const Catalog& catalog) {
  CatalogReport report;
  const auto& manifest = catalog.manifest();
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& rec : catalog.records()) {
    ++report.records_checked;
    ++counts[rec.id.order];
    const std::string tag = "[" + rec.id.to_string() + "] " + rec.name + ": ";
    if (!catalog.covers(rec.id.order))
      report.violations.push_back(tag + "order not listed in #covered-orders");
    try {
      FiniteGroup g(rec.generators);
      if (g.order() != rec.id.order)
        report.violations.push_back(tag + "generators give order " + std::to_string(g.order()));
    } catch (const CapExceeded& e) {
      report.violations.push_back(tag + e.what());
    }
  }
  for (const auto& [order, expected] : manifest.expected_counts) {
    if (is_prime(order) && expected != 1)
      report.violations.push_back("order " + std::to_string(order) +
                                  ": prime order must have exactly one group, manifest says " +
                                  std::to_string(expected));
    std::uint64_t have = counts.contains(order) ? counts.at(order) : 0;
    if (have != expected)
      report.violations.push_back("order " + std::to_string(order) + ": " + std::to_string(have) +
                                  " records, manifest expects " + std::to_string(expected));
  }
  for (const auto& [order, have] : counts) {
    auto q = catalog.groups_of_order(order);
    for (std::size_t i = 0; i < q.records.size(); ++i)
      if (q.records[i].id.index != i + 1) {
        report.violations.push_back("order " + std::to_string(order) +
                                    ": indices are not 1.." + std::to_string(have));
        break;
      }
  }
  return report;
}

} // namespace atlas
