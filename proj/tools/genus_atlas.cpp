// genus-atlas: classify finite groups by strong symmetric genus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "genus_atlas/catalog.hpp"
#include "genus_atlas/classification_db.hpp"
#include "genus_atlas/classifier.hpp"
#include "genus_atlas/errors.hpp"
#include "genus_atlas/signature.hpp"

namespace {

constexpr int kExitCoverage = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitDb = 4;

struct ClassifyArgs {
  std::optional<int> genus;
  std::optional<int> max_genus;
  std::string catalog;
  std::string db;
  unsigned jobs = 1;
  bool verbose = false;
};

int run_classify(const ClassifyArgs& args) {
  const atlas::Catalog catalog = atlas::load_catalog(args.catalog);
  atlas::ClassificationDb db = atlas::db_load_file(args.db);
  int first = args.genus ? *args.genus : 2;
  int last = args.genus ? *args.genus : *args.max_genus;
  atlas::ClassifyOptions options;
  options.jobs = args.jobs;
  options.log = args.verbose ? &std::cerr : nullptr;
  for (int g = first; g <= last; ++g) {
    auto records = atlas::classify_genus(g, catalog, db, options);
    atlas::db_store_file(db, args.db);
    std::cout << "genus " << g << ": nu = " << records.size() << '\n';
    for (const auto& r : records)
      std::cout << "  [" << r.id.to_string() << "] " << r.name << ' '
                << r.signature.to_string() << '\n';
  }
  return 0;
}

int run_signatures(int genus, std::optional<std::uint64_t> order) {
  for (const auto& pair : atlas::candidate_pairs(genus)) {
    if (order && pair.order != *order)
      continue;
    std::cout << pair.order << ' ' << pair.signature.to_string() << '\n';
  }
  return 0;
}

int run_verify(const std::string& path) {
  const atlas::Catalog catalog = atlas::load_catalog(path);
  const auto report = atlas::verify_catalog(catalog);
  for (const auto& v : report.violations)
    std::cout << "VIOLATION " << v << '\n';
  std::cout << report.records_checked << " records, " << report.violations.size()
            << " violations\n";
  return report.ok() ? 0 : kExitMalformed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify finite groups by strong symmetric genus", "genus-atlas"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Classify groups of a given genus");
  auto* genus_opt = classify_cmd->add_option("--genus", classify.genus, "Single genus to run");
  auto* max_opt =
      classify_cmd->add_option("--max-genus", classify.max_genus, "Run genera 2..G in order");
  genus_opt->excludes(max_opt);
  classify_cmd->add_option("--catalog", classify.catalog, "Group catalog file")
      ->required()
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--db", classify.db, "Classification database file")->required();
  classify_cmd->add_option("--jobs", classify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--verbose", classify.verbose, "Log filter verdicts to stderr");

  int sig_genus = 2;
  std::optional<std::uint64_t> sig_order;
  auto* sig_cmd = app.add_subcommand("signatures", "List Riemann-Hurwitz candidate pairs");
  sig_cmd->add_option("--genus", sig_genus, "Target genus")->required();
  sig_cmd->add_option("--order", sig_order, "Only pairs of this group order");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify-catalog", "Check a catalog for consistency");
  verify_cmd->add_option("--catalog", verify_path, "Group catalog file")->required();

  std::string nu_db;
  auto* nu_cmd = app.add_subcommand("nu-table", "Print nu(g) for finished genera");
  nu_cmd->add_option("--db", nu_db, "Classification database file")->required();

  std::string plot_db, plot_out;
  auto* plot_cmd = app.add_subcommand("plot-csv", "Write nu(g) as CSV");
  plot_cmd->add_option("--db", plot_db, "Classification database file")->required();
  plot_cmd->add_option("--out", plot_out, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      if (!classify.genus && !classify.max_genus) {
        std::cerr << "classify: one of --genus or --max-genus is required\n";
        return kExitMalformed;
      }
      return run_classify(classify);
    }
    if (*sig_cmd)
      return run_signatures(sig_genus, sig_order);
    if (*verify_cmd)
      return run_verify(verify_path);
    if (*nu_cmd) {
      std::cout << atlas::nu_table(atlas::db_load_file(nu_db));
      return 0;
    }
    if (*plot_cmd) {
      const std::string csv = atlas::plot_csv(atlas::db_load_file(plot_db));
      std::ofstream out(plot_out, std::ios::binary | std::ios::trunc);
      if (!out) {
        std::cerr << "cannot write " << plot_out << '\n';
        return EXIT_FAILURE;
      }
      out << csv;
      return 0;
    }
  } catch (const atlas::CoverageError& e) {
    std::cerr << "coverage abort: " << e.what() << '\n';
    return kExitCoverage;
  } catch (const atlas::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const atlas::DbError& e) {
    std::cerr << "db error: " << e.what() << '\n';
    return kExitDb;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return 0;
}
