#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latwb/bounds.hpp"
#include "latwb/count_table.hpp"
#include "latwb/lattice.hpp"

namespace latwb {

// ---------------------------------------------------------------------------
// Lattice listings: a "LATF 1" header, then one record per line of the form
// n;C0;C1;...;C(n-1) where Ci lists the upper covers of i in ascending order.

inline constexpr std::string_view kListingHeader = "LATF 1";

/// One record. Throws ParseError("SyntaxError") or ParseError("ValidationError").
Lattice parse_record(std::string_view record, std::size_t line = 1);
std::string render_record(const Lattice& l);

std::vector<Lattice> parse_listing(std::istream& in);
std::vector<Lattice> read_listing(const std::filesystem::path& path);
void render_listing(std::ostream& out, std::span<const Lattice> lattices);

// ---------------------------------------------------------------------------
// Count tables: n<TAB>value per line, n contiguous from 1.

/// Throws ParseError("SyntaxError") or Error("NonContiguousIndex").
CountTable parse_count_table(std::istream& in, const std::string& family, CountKind kind);
CountTable ingest_external(const std::filesystem::path& path, const std::string& family, CountKind kind);
void render_count_table(std::ostream& out, const CountTable& table);

// ---------------------------------------------------------------------------
// Certificates: line-oriented text starting with "LATCERT 1".

void render_certificate(std::ostream& out, const BoundCertificate& cert);
/// Throws Error("MalformedCertificate").
BoundCertificate parse_certificate(std::istream& in);

// ---------------------------------------------------------------------------
// Files

/// Writes through a temporary sibling and renames it into place, so a failed
/// write never leaves a partial file behind. Throws Error("IoError").
void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

/// Throws Error("IoError") when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);

}  // namespace latwb
