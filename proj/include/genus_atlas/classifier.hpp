#ifndef GENUS_ATLAS_CLASSIFIER_HPP_
#define GENUS_ATLAS_CLASSIFIER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "genus_atlas/catalog.hpp"
#include "genus_atlas/classification_db.hpp"
#include "genus_atlas/finite_group.hpp"

namespace atlas {

// Cyclic, dihedral, A4, S4 or A5.
bool has_genus_zero(const FiniteGroup& g);

// A surface kernel epimorphism from one of (1; -), (0; 2,2,2,2), (0; 3,3,3),
// (0; 2,4,4), (0; 2,3,6) onto G.
bool has_genus_one(const FiniteGroup& g);

struct ClassifyOptions {
  unsigned jobs = 1;
  // Receives REJECT / GENUS0 / GENUS1 / ACCEPT lines when set.
  std::ostream* log = nullptr;
};

// Groups of strong symmetric genus exactly g, sorted by id. On success the
// genus-g records in `db` are replaced and complete_through is raised to g.
// Throws CoverageError when the catalog misses a candidate order and DbError
// when the db is not complete through g - 1; `db` is untouched on error.
std::vector<GenusRecord> classify_genus(int g, const Catalog& catalog, ClassificationDb& db,
                                        const ClassifyOptions& options = {});

// "g,nu(g)" header plus one row per finished genus.
std::string nu_table(const ClassificationDb& db);
// "genus,nu" header plus one row per finished genus, LF line endings.
std::string plot_csv(const ClassificationDb& db);

} // namespace atlas

#endif // GENUS_ATLAS_CLASSIFIER_HPP_
