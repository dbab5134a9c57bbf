#include "genus_atlas/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "genus_atlas/epi_search.hpp"
#include "genus_atlas/errors.hpp"
#include "genus_atlas/filters.hpp"
#include "genus_atlas/signature.hpp"

namespace atlas {

bool has_genus_zero(const FiniteGroup& g) { return recognize_genus_zero(g); }

bool has_genus_one(const FiniteGroup& g) {
  // (1; -): [a,b] = 1 with <a,b> = G, i.e. G abelian on two generators.
  if (g.is_abelian() && abelian_invariants(g).factors.size() <= 2)
    return true;
  for (const auto& sig : euclidean_signatures()) {
    if (sig.orbit_genus != 0)
      continue;
    if (find_surface_kernel_epi(sig, g))
      return true;
  }
  return false;
}

namespace {

struct Outcome {
  std::optional<GenusRecord> record;
  std::string log;
};

Outcome classify_group(const CatalogRecord& rec, const std::vector<const CandidatePair*>& pairs,
                       const ClassificationDb& db, bool want_log) {
  Outcome out;
  std::ostringstream log;
  const FiniteGroup group(rec.generators);
  const CandidateGroup candidate(rec.id, group);
  const std::string tag = rec.id.to_string();
  for (const CandidatePair* pair : pairs) {
    FilterVerdict verdict = run_filters(*pair, candidate, db);
    if (!verdict.pass) {
      if (want_log)
        log << "REJECT " << tag << ' ' << pair->signature.to_string() << ' '
            << to_string(*verdict.reason) << '\n';
      continue;
    }
    auto witness = find_surface_kernel_epi(pair->signature, group);
    if (!witness) {
      if (want_log)
        log << "NOEPI " << tag << ' ' << pair->signature.to_string() << '\n';
      continue;
    }
    if (!validate_witness(pair->signature, group, *witness))
      throw std::logic_error("search returned an invalid witness for [" + tag + "] " +
                             pair->signature.to_string());
    if (has_genus_zero(group)) {
      if (want_log)
        log << "GENUS0 " << tag << ' ' << rec.name << '\n';
    } else if (has_genus_one(group)) {
      if (want_log)
        log << "GENUS1 " << tag << ' ' << rec.name << '\n';
    } else {
      if (want_log)
        log << "ACCEPT " << tag << ' ' << rec.name << ' ' << pair->signature.to_string() << '\n';
      out.record = GenusRecord{pair->target_genus, rec.id, rec.name, pair->signature,
                               std::move(*witness)};
    }
    break;
  }
  out.log = log.str();
  return out;
}

} // namespace

std::vector<GenusRecord> classify_genus(int g, const Catalog& catalog, ClassificationDb& db,
                                        const ClassifyOptions& options) {
  const auto pairs = candidate_pairs(g);
  std::map<std::uint64_t, std::vector<const CandidatePair*>> by_order;
  for (const auto& p : pairs)
    by_order[p.order].push_back(&p);

  std::vector<long> missing;
  for (const auto& [order, list] : by_order)
    if (!catalog.covers(order))
      missing.push_back(static_cast<long>(order));
  if (!missing.empty())
    throw CoverageError(std::move(missing));
  if (db.complete_through() < g - 1)
    throw DbError("classification db is complete through genus " +
                  std::to_string(db.complete_through()) + "; genus " + std::to_string(g) +
                  " needs every genus below it");

  struct Item {
    const CatalogRecord* record;
    const std::vector<const CandidatePair*>* pairs;
  };
  std::vector<Item> items;
  for (const auto& [order, list] : by_order)
    for (const auto& rec : catalog.groups_of_order(order).records)
      items.push_back({&rec, &list});

  std::vector<Outcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const bool want_log = options.log != nullptr;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        outcomes[i] = classify_group(*items[i].record, *items[i].pairs, db, want_log);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = items.size();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t)
      threads.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  std::vector<GenusRecord> records;
  for (auto& o : outcomes) {
    if (want_log)
      *options.log << o.log;
    if (o.record)
      records.push_back(std::move(*o.record));
  }
  std::sort(records.begin(), records.end(),
            [](const GenusRecord& a, const GenusRecord& b) { return a.id < b.id; });

  ClassificationDb updated = db;
  updated.replace_genus(g, records);
  updated.set_complete_through(std::max(updated.complete_through(), g));
  db = std::move(updated);
  return records;
}

std::string nu_table(const ClassificationDb& db) {
  std::string out = "g,nu(g)\n";
  for (int g = 2; g <= db.complete_through(); ++g)
    out += std::to_string(g) + "," + std::to_string(db.nu(g)) + "\n";
  return out;
}

std::string plot_csv(const ClassificationDb& db) {
  std::string out = "genus,nu\n";
  for (int g = 2; g <= db.complete_through(); ++g)
    out += std::to_string(g) + "," + std::to_string(db.nu(g)) + "\n";
  return out;
}

} // namespace atlas
