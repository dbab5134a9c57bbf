#ifndef GENUS_ATLAS_CLASSIFICATION_DB_HPP_
#define GENUS_ATLAS_CLASSIFICATION_DB_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus_atlas/catalog.hpp"
#include "genus_atlas/signature.hpp"
#include "genus_atlas/witness.hpp"

namespace atlas {

// A group of strong symmetric genus `genus`, with one witnessing action.
struct GenusRecord {
  int genus = 0;
  GroupId id;
  std::string name;
  Signature signature;
  Witness witness;

  friend bool operator==(const GenusRecord&, const GenusRecord&) = default;
};

// Results of finished classification runs, keyed by genus.
class ClassificationDb {
public:
  // Highest genus whose run finished; 1 when no genus >= 2 has been run.
  int complete_through() const { return complete_through_; }
  void set_complete_through(int g) { complete_through_ = g; }

  const std::map<int, std::vector<GenusRecord>>& records() const { return records_; }
  std::size_t nu(int g) const;

  // Genus under which `id` is recorded, if any.
  std::optional<int> lookup(GroupId id) const;

  // Throws DbError if the id is already recorded under a different genus.
  void insert(GenusRecord record);
  // Drops every record of genus g, then inserts `records` (all of genus g).
  void replace_genus(int g, std::vector<GenusRecord> records);

  friend bool operator==(const ClassificationDb&, const ClassificationDb&) = default;

private:
  std::map<int, std::vector<GenusRecord>> records_;
  std::map<GroupId, int> index_;
  int complete_through_ = 1;
};

// One JSON object per line:
//   {"genus":2,"order":8,"index":3,"name":"D8","degree":4,
//    "signature":{"orbit_genus":0,"periods":[2,2,2,2,2]},"witness":["(1,2)",...]}
// terminated by {"complete_through":N}. Witness images are listed
// hyperbolic first, then elliptic. Throws DbError on corrupt input.
ClassificationDb db_load(std::istream& in);
// A missing file loads as an empty database.
ClassificationDb db_load_file(const std::filesystem::path& path);
void db_store(const ClassificationDb& db, std::ostream& out);
// Writes to a sibling temporary file, then renames over `path`.
void db_store_file(const ClassificationDb& db, const std::filesystem::path& path);
std::optional<int> db_lookup(const ClassificationDb& db, GroupId id);

} // namespace atlas

#endif // GENUS_ATLAS_CLASSIFICATION_DB_HPP_
