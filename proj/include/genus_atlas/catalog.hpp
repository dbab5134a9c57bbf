#ifndef GENUS_ATLAS_CATALOG_HPP_
#define GENUS_ATLAS_CATALOG_HPP_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "genus_atlas/permutation.hpp"

namespace atlas {

// Position of a group in the catalog: [order, index], index counted from 1.
struct GroupId {
  std::uint64_t order = 0;
  std::uint64_t index = 0;

  std::string to_string() const { return std::to_string(order) + "," + std::to_string(index); }
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

struct CatalogRecord {
  GroupId id;
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// What the catalog claims to cover. Completeness per order is taken on trust
// from `expected_counts`; verify_catalog only checks consistency.
struct CatalogManifest {
  std::set<std::uint64_t> covered_orders;
  std::map<std::uint64_t, std::uint64_t> expected_counts;
};

struct OrderQuery {
  std::span<const CatalogRecord> records;
  bool covered = false;
};

class Catalog {
public:
  Catalog() = default;
  // Records are sorted by id. Throws ParseError on a duplicate id.
  Catalog(CatalogManifest manifest, std::vector<CatalogRecord> records);

  const CatalogManifest& manifest() const { return manifest_; }
  const std::vector<CatalogRecord>& records() const { return records_; }

  bool covers(std::uint64_t order) const { return manifest_.covered_orders.contains(order); }
  // All records of order n in index order; `covered` is false when n is
  // outside the manifest.
  OrderQuery groups_of_order(std::uint64_t n) const;
  const CatalogRecord* find(GroupId id) const;
  // First record with this display name.
  const CatalogRecord* find_by_name(std::string_view name) const;

private:
  CatalogManifest manifest_;
  std::vector<CatalogRecord> records_;
};

// Text format:
//   #covered-orders:1-12,16,20      (required)
//   #count:12=5                     (optional, per order)
//   # anything else                 (comment)
//   <order> <index> <name> <degree> <gen>;<gen>;...
// Throws ParseError carrying the offending line number.
Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::filesystem::path& path);

// Canonical form: manifest header, count lines by order, records by id.
std::string serialize_catalog(const Catalog& catalog);

struct CatalogReport {
  std::size_t records_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

CatalogReport verify_catalog(const Catalog& catalog);

} // namespace atlas

#endif // GENUS_ATLAS_CATALOG_HPP_
