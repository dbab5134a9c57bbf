#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "genus_atlas/classifier.hpp"
#include "genus_atlas/epi_search.hpp"
#include "genus_atlas/errors.hpp"
#include "test_support.hpp"

using namespace atlas;
using namespace atlas::testing;

namespace {

std::string stored(const ClassificationDb& db) {
  std::ostringstream out;
  db_store(db, out);
  return out.str();
}

std::vector<std::string> names(const std::vector<GenusRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records)
    out.push_back(r.name);
  return out;
}

} // namespace

TEST_CASE("genus zero and genus one") {
  CHECK(has_genus_zero(cyclic(9)));
  CHECK(has_genus_zero(dihedral(6)));
  CHECK(has_genus_zero(a5()));
  CHECK_FALSE(has_genus_zero(q8()));
  CHECK(has_genus_one(c2cubed()));
  CHECK_FALSE(has_genus_one(q8()));
  CHECK(has_genus_one(c4xc2()));
  CHECK(has_genus_one(cyclic(6)));
  CHECK(has_genus_one(a4()));
}

TEST_CASE("genus 2 on the small catalog") {
  ClassificationDb db;
  std::ostringstream log;
  const auto records = classify_genus(2, small_catalog(), db, {1, &log});
  CHECK(records.size() == 6);
  CHECK(names(records) ==
        std::vector<std::string>{"Q8", "C3:C4", "QD16", "SL(2,3)", "(C6xC2):C2", "GL(2,3)"});
  CHECK(db.complete_through() == 2);
  CHECK(db.nu(2) == 6);
  CHECK(std::is_sorted(records.begin(), records.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const auto& r : records) {
    CAPTURE(r.name);
    const auto g = group_of(*small_catalog().find(r.id));
    CHECK(validate_witness(r.signature, g, r.witness));
    CHECK(rh_genus(r.signature, r.id.order) == Rational(2));
  }
  CHECK(log.str().find("ACCEPT 8,4 Q8 (0; 4,4,4)") != std::string::npos);
  CHECK(log.str().find("REJECT") != std::string::npos);
}

TEST_CASE("coverage abort names the missing orders") {
  CatalogManifest manifest = small_catalog().manifest();
  manifest.covered_orders.erase(48);
  std::vector<CatalogRecord> kept;
  for (const auto& r : small_catalog().records())
    if (r.id.order != 48)
      kept.push_back(r);
  const Catalog partial(manifest, kept);
  ClassificationDb db;
  try {
    classify_genus(2, partial, db);
    FAIL("expected a coverage abort");
  } catch (const CoverageError& e) {
    CHECK(e.missing_orders() == std::vector<long>{48});
    CHECK(std::string(e.what()).find("48") != std::string::npos);
  }
  CHECK(db == ClassificationDb{});
}

TEST_CASE("a genus needs the previous one finished") {
  ClassificationDb db;
  CHECK_THROWS_AS(classify_genus(3, extended_catalog(), db), DbError);
  CHECK(db == ClassificationDb{});
}

TEST_CASE("rerunning a genus is byte identical") {
  ClassificationDb db;
  classify_genus(2, small_catalog(), db);
  const std::string first = stored(db);
  classify_genus(2, small_catalog(), db);
  CHECK(stored(db) == first);
}

TEST_CASE("parallel and serial runs agree") {
  ClassificationDb serial, parallel;
  classify_genus(2, small_catalog(), serial, {1, nullptr});
  classify_genus(2, small_catalog(), parallel, {4, nullptr});
  CHECK(stored(serial) == stored(parallel));
}

TEST_CASE("nu table and csv") {
  ClassificationDb db;
  CHECK(nu_table(db) == "g,nu(g)\n");
  classify_genus(2, small_catalog(), db);
  CHECK(nu_table(db) == "g,nu(g)\n2,6\n");
  CHECK(plot_csv(db) == "genus,nu\n2,6\n");
}

TEST_CASE("witnesses revalidate after a db round trip") {
  ClassificationDb db;
  classify_genus(2, small_catalog(), db);
  std::stringstream buf;
  db_store(db, buf);
  const auto back = db_load(buf);
  CHECK(back == db);
  for (const auto& r : back.records().at(2)) {
    CAPTURE(r.name);
    CHECK(validate_witness(r.signature, group_of(*small_catalog().find(r.id)), r.witness));
  }
}
