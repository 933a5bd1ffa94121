#include "latwb/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace latwb {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool parse_index(std::string_view s, std::size_t& out) {
  if (s.empty() || s.size() > 9) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_decimal(std::string_view s) {
  if (s.starts_with('-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Listings

Lattice parse_record(std::string_view record, std::size_t line) {
  const auto fields = split(record, ';');
  std::size_t n = 0;
  if (!parse_index(fields.front(), n) || n == 0)
    throw ParseError("SyntaxError", line, "record must start with a positive element count");
  if (fields.size() != n + 1)
    throw ParseError("SyntaxError", line, "expected " + std::to_string(n) + " cover lists, found " +
                                              std::to_string(fields.size() - 1));
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view list = fields[i + 1];
    if (list.empty()) continue;
    std::size_t previous = 0;
    bool first = true;
    for (std::string_view item : split(list, ',')) {
      std::size_t j = 0;
      if (!parse_index(item, j)) throw ParseError("SyntaxError", line, "bad cover index '" + std::string(item) + "'");
      if (!first && j <= previous)
        throw ParseError("SyntaxError", line, "cover list of element " + std::to_string(i) + " is not ascending");
      pairs.emplace_back(i, j);
      previous = j;
      first = false;
    }
  }
  try {
    return as_lattice(build_poset(n, pairs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("ValidationError", line, e.code() + ": " + e.what());
  }
}

std::string render_record(const Lattice& l) {
  std::string out = std::to_string(l.size());
  for (Element i = 0; i < l.size(); ++i) {
    out += ';';
    bool first = true;
    for (Element j : l.poset().upper_covers(i)) {
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
  }
  return out;
}

std::vector<Lattice> parse_listing(std::istream& in) {
  std::string line;
  std::size_t number = 1;
  if (!std::getline(in, line) || line != kListingHeader)
    throw ParseError("SyntaxError", 1, "missing '" + std::string(kListingHeader) + "' header");
  std::vector<Lattice> out;
  while (std::getline(in, line)) {
    ++number;
    out.push_back(parse_record(line, number));
  }
  return out;
}

std::vector<Lattice> read_listing(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_listing(in);
}

void render_listing(std::ostream& out, std::span<const Lattice> lattices) {
  out << kListingHeader << '\n';
  for (const Lattice& l : lattices) out << render_record(l) << '\n';
}

// ---------------------------------------------------------------------------
// Count tables

CountTable parse_count_table(std::istream& in, const std::string& family, CountKind kind) {
  CountTable table{family, kind, Provenance::external_file, {}};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto fields = split(line, '\t');
    std::size_t n = 0;
    if (fields.size() != 2 || !parse_index(fields[0], n) || !is_decimal(fields[1]))
      throw ParseError("SyntaxError", number, "expected 'n<TAB>value'");
    if (n != table.values.size() + 1)
      throw Error("NonContiguousIndex", "line " + std::to_string(number) + ": expected n = " +
                                            std::to_string(table.values.size() + 1) + ", found " + std::to_string(n));
    BigInt value(std::string(fields[1]), 10);
    if (value < 0) throw ParseError("SyntaxError", number, "counts must be nonnegative");
    table.values.push_back(std::move(value));
  }
  if (table.values.empty()) throw Error("NonContiguousIndex", "count table is empty; indices must start at 1");
  return table;
}

CountTable ingest_external(const std::filesystem::path& path, const std::string& family, CountKind kind) {
  auto in = open_input(path);
  return parse_count_table(in, family, kind);
}

void render_count_table(std::ostream& out, const CountTable& table) {
  for (std::size_t n = 1; n <= table.size(); ++n) out << n << '\t' << table.at(n).get_str() << '\n';
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

constexpr std::string_view kCertificateHeader = "LATCERT 1";

void write_list(std::ostream& out, std::string_view key, const std::vector<BigInt>& values) {
  out << key;
  for (const BigInt& v : values) out << ' ' << v.get_str();
  out << '\n';
}

class CertificateReader {
 public:
  explicit CertificateReader(std::istream& in) : in_(in) {}

  // Next line split into its key and the remaining words.
  std::vector<std::string> expect(std::string_view key) {
    std::string line;
    if (!std::getline(in_, line)) fail("unexpected end of file, wanted '" + std::string(key) + "'");
    ++line_;
    std::istringstream words(line);
    std::vector<std::string> out;
    for (std::string w; words >> w;) out.push_back(w);
    if (out.empty() || out.front() != key) fail("expected '" + std::string(key) + "'");
    out.erase(out.begin());
    return out;
  }

  std::size_t count(const std::string& word) {
    std::size_t v = 0;
    if (!parse_index(word, v)) fail("bad count '" + word + "'");
    return v;
  }

  BigInt integer(const std::string& word) {
    if (!is_decimal(word)) fail("bad integer '" + word + "'");
    return BigInt(word, 10);
  }

  std::vector<BigInt> integers(const std::vector<std::string>& words) {
    std::vector<BigInt> out;
    for (const auto& w : words) out.push_back(integer(w));
    return out;
  }

  std::string single(std::vector<std::string> words) {
    if (words.size() != 1) fail("expected exactly one value");
    return words.front();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error("MalformedCertificate", "line " + std::to_string(line_) + ": " + msg);
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;  // the header
};

}  // namespace

void render_certificate(std::ostream& out, const BoundCertificate& cert) {
  const Recurrence& rec = cert.recurrence;
  out << kCertificateHeader << '\n';
  out << "shape " << to_string(rec.shape) << '\n';
  out << "source " << (rec.source.empty() ? "-" : rec.source) << ' ' << rec.source_n << '\n';
  out << "order " << rec.order() << '\n';
  out << "homogeneous-from " << rec.homogeneous_from << '\n';
  write_list(out, "coeffs", rec.coeffs);
  write_list(out, "initial", rec.initial);
  out << "c " << cert.c.get_num().get_str() << '/' << cert.c.get_den().get_str() << '\n';
  out << "poly-check " << cert.poly_value.get_str() << '\n';
  out << "window-start " << cert.window_start << '\n';
  for (const BigInt& v : cert.window) out << "window " << v.get_str() << '\n';
  out << "end\n";
}

BoundCertificate parse_certificate(std::istream& in) {
  CertificateReader r(in);
  std::string header;
  if (!std::getline(in, header) || header != kCertificateHeader)
    throw Error("MalformedCertificate", "missing '" + std::string(kCertificateHeader) + "' header");

  BoundCertificate cert;
  Recurrence& rec = cert.recurrence;
  try {
    rec.shape = recurrence_shape_from_string(r.single(r.expect("shape")));
  } catch (const Error& e) {
    if (e.code() == "MalformedCertificate") throw;
    r.fail(e.what());
  }
  auto source = r.expect("source");
  if (source.size() != 2) r.fail("source needs a name and N");
  rec.source = source[0] == "-" ? "" : source[0];
  rec.source_n = r.count(source[1]);
  const std::size_t d = r.count(r.single(r.expect("order")));
  rec.homogeneous_from = r.count(r.single(r.expect("homogeneous-from")));
  rec.coeffs = r.integers(r.expect("coeffs"));
  if (rec.coeffs.size() != d) r.fail("coefficient count differs from the order");
  rec.initial = r.integers(r.expect("initial"));
  try {
    cert.c = parse_rational(r.single(r.expect("c")));
  } catch (const Error& e) {
    if (e.code() == "MalformedCertificate") throw;
    r.fail(e.what());
  }
  cert.poly_value = r.integer(r.single(r.expect("poly-check")));
  cert.window_start = r.count(r.single(r.expect("window-start")));
  for (std::size_t i = 0; i < d; ++i) cert.window.push_back(r.integer(r.single(r.expect("window"))));
  r.expect("end");
  return cert;
}

// ---------------------------------------------------------------------------
// Files

void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("IoError", "cannot open '" + tmp.string() + "' for writing");
      writer(out);
      out.flush();
      if (!out) throw Error("IoError", "write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace latwb
