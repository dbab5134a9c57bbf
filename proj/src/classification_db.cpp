#include "genus_atlas/classification_db.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "genus_atlas/errors.hpp"
#include "json.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

std::size_t ClassificationDb::nu(int g) const {
  auto it = records_.find(g);
  return it == records_.end() ? 0 : it->second.size();
}

std::optional<int> ClassificationDb::lookup(GroupId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

void ClassificationDb::insert(GenusRecord record) {
  if (auto prior = lookup(record.id)) {
    if (*prior != record.genus)
      throw DbError("group [" + record.id.to_string() + "] already recorded at genus " +
                    std::to_string(*prior) + ", cannot add at genus " +
                    std::to_string(record.genus));
    throw DbError("group [" + record.id.to_string() + "] recorded twice at genus " +
                  std::to_string(record.genus));
  }
  index_[record.id] = record.genus;
  auto& list = records_[record.genus];
  auto pos = std::lower_bound(list.begin(), list.end(), record.id,
                              [](const GenusRecord& r, const GroupId& id) { return r.id < id; });
  list.insert(pos, std::move(record));
}

void ClassificationDb::replace_genus(int g, std::vector<GenusRecord> records) {
  if (auto it = records_.find(g); it != records_.end()) {
    for (const auto& r : it->second)
      index_.erase(r.id);
    records_.erase(it);
  }
  for (auto& r : records) {
    if (r.genus != g)
      throw DbError("replace_genus: record for [" + r.id.to_string() + "] has genus " +
                    std::to_string(r.genus) + ", expected " + std::to_string(g));
    insert(std::move(r));
  }
}

std::optional<int> db_lookup(const ClassificationDb& db, GroupId id) { return db.lookup(id); }

namespace {

Json record_to_json(const GenusRecord& r) {
  Json images = Json::array();
  std::size_t degree = 1;
  for (const auto& p : r.witness.all_images()) {
    images.push_back(p.to_cycles());
    degree = p.degree();
  }
  return Json{{"genus", r.genus},
              {"order", r.id.order},
              {"index", r.id.index},
              {"name", r.name},
              {"degree", degree},
              {"signature", {{"orbit_genus", r.signature.orbit_genus},
                             {"periods", r.signature.periods}}},
              {"witness", images}};
}

GenusRecord record_from_json(const Json& j) {
  GenusRecord r;
  r.genus = j.at("genus").get<int>();
  r.id.order = j.at("order").get<std::uint64_t>();
  r.id.index = j.at("index").get<std::uint64_t>();
  r.name = j.at("name").get<std::string>();
  const auto degree = j.at("degree").get<std::size_t>();
  const auto& sig = j.at("signature");
  r.signature = Signature(sig.at("orbit_genus").get<int>(),
                          sig.at("periods").get<std::vector<int>>());
  const auto& images = j.at("witness");
  const std::size_t hyperbolic = 2 * static_cast<std::size_t>(r.signature.orbit_genus);
  if (images.size() != hyperbolic + r.signature.r())
    throw DbError("witness for [" + r.id.to_string() + "] has " +
                  std::to_string(images.size()) + " images, signature " +
                  r.signature.to_string() + " needs " +
                  std::to_string(hyperbolic + r.signature.r()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto p = Permutation::from_cycles(images[i].get<std::string>(), degree);
    (i < hyperbolic ? r.witness.hyperbolic : r.witness.elliptic).push_back(std::move(p));
  }
  return r;
}

} // namespace

ClassificationDb db_load(std::istream& in) {
  ClassificationDb db;
  std::optional<int> trailer;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    const std::string where = "db line " + std::to_string(line_no) + ": ";
    if (trailer)
      throw DbError(where + "content after the complete_through trailer");
    try {
      Json j = Json::parse(line);
      if (j.contains("complete_through")) {
        trailer = j.at("complete_through").get<int>();
        continue;
      }
      GenusRecord r = record_from_json(j);
      if (r.genus < 2)
        throw DbError("genus below 2");
      db.insert(std::move(r));
    } catch (const DbError& e) {
      throw DbError(where + e.what());
    } catch (const std::exception& e) {
      throw DbError(where + e.what());
    }
  }
  if (!trailer)
    throw DbError("classification db lacks the complete_through trailer");
  if (*trailer < 1)
    throw DbError("complete_through must be at least 1");
  if (!db.records().empty() && db.records().rbegin()->first > *trailer)
    throw DbError("records present beyond complete_through = " + std::to_string(*trailer));
  db.set_complete_through(*trailer);
  return db;
}

ClassificationDb db_load_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    return {};
  std::ifstream in(path);
  if (!in)
    throw DbError("cannot open db " + path.string());
  return db_load(in);
}

void db_store(const ClassificationDb& db, std::ostream& out) {
  for (const auto& [g, list] : db.records())
    for (const auto& r : list)
      out << record_to_json(r).dump() << '\n';
  out << Json{{"complete_through", db.complete_through()}}.dump() << '\n';
}

void db_store_file(const ClassificationDb& db, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw DbError("cannot write db " + tmp.string());
    db_store(db, out);
    if (!out)
      throw DbError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw DbError("cannot replace " + path.string() + ": " + ec.message());
}

} // namespace atlas
