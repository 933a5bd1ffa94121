#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latwb/bounds.hpp"
#include "latwb/count_table.hpp"
#include "latwb/enumerate.hpp"
#include "latwb/lattice.hpp"

namespace latwb {

/// The published constants: count tables, scalar targets and example
/// lattices, all loaded from one bundled text file.
struct PaperDataset {
  std::map<std::string, CountTable> tables;
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::string> lattices;  // listing records

  /// Lookups throw Error("MissingEntry").
  const CountTable& table(const std::string& name) const;
  BigInt integer(const std::string& name) const;
  Rational rational(const std::string& name) const;
  const std::string& text(const std::string& name) const;
  Lattice lattice(const std::string& name) const;
};

/// $LATWB_DATA_DIR/paper_dataset.txt, falling back to the source tree.
std::filesystem::path default_dataset_path();

/// Lowercase hex SHA-256 of a file.
std::string sha256_hex(const std::filesystem::path& path);

PaperDataset parse_paper_dataset(std::istream& in);
/// With `verify_checksum`, compares against the ".sha256" sidecar and throws
/// Error("ChecksumMismatch") on any difference.
PaperDataset load_paper_dataset(const std::filesystem::path& path, bool verify_checksum = true);

struct SuiteEntry {
  std::string check;     // check id, e.g. "modular-vsum"
  std::string item;      // what was compared
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteOptions {
  std::vector<std::string> only;     // empty runs every check
  bool pin_published_start = false;  // certify at the published window starts
  CertifyOptions certify;
  EnumLimits limits = EnumLimits::from_env();
};

/// Check ids in execution order.
const std::vector<std::string>& paper_check_ids();

/// Runs the selected checks; failures become entries, never exceptions.
/// Throws Error("UnknownCheck") for an id outside paper_check_ids().
std::vector<SuiteEntry> run_paper_suite(const PaperDataset& data, const SuiteOptions& options = {});

/// Fixed-width expected/computed table.
void render_suite_report(std::ostream& out, const std::vector<SuiteEntry>& entries);

}  // namespace latwb
