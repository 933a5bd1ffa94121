// latwb: command-line front end for the lattice workbench.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latwb/bounds.hpp"
#include "latwb/canonical.hpp"
#include "latwb/compose.hpp"
#include "latwb/enumerate.hpp"
#include "latwb/io.hpp"
#include "latwb/paper.hpp"
#include "latwb/props.hpp"

namespace fs = std::filesystem;
using namespace latwb;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Errors caused by the input rather than by the mathematics.
bool is_input_error(const std::string& code) {
  static const std::set<std::string> codes{
      "IoError",      "SyntaxError",   "ValidationError",   "NonContiguousIndex",   "MalformedCertificate",
      "ChecksumMismatch", "UnknownCheck", "UnknownFamily",  "UnknownKind",          "UnknownShape",
      "MissingEntry", "Usage",         "ResourceCap",       "InvalidEnvironment",   "PreconditionViolated",
      "IndexOutOfRange", "InvalidRecurrence", "InvalidTable"};
  return codes.count(code) > 0;
}

int report_error(const std::string& code, const std::string& message, std::optional<std::size_t> line = {}) {
  nlohmann::json record{{"error", code}, {"message", message}};
  if (line) record["line"] = *line;
  std::cerr << record.dump() << '\n';
  return is_input_error(code) ? kExitUsage : kExitCheckFailed;
}

// Sends output to --out through an atomic rename, or to stdout.
void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
    std::cout.flush();
  } else {
    write_file_atomic(out_path, writer);
  }
}

std::vector<Lattice> sorted_unique(std::vector<Lattice> lattices) {
  std::vector<std::pair<CanonicalCode, Lattice>> keyed;
  for (auto& l : lattices) {
    Lattice c = canonical_form(l);
    keyed.emplace_back(canonical_code(c), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Lattice> out;
  for (auto& [code, l] : keyed) out.push_back(std::move(l));
  return out;
}

const char* flag(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const Check& c) {
  if (c.holds || c.witness.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? "," : "") + std::to_string(c.witness[i]);
  return out + ")";
}

struct TableArgs {
  std::string path;
  std::string family = "unknown";
  std::string shape = "vsum";
  std::size_t big_n = 0;  // 0: the whole table

  void attach(CLI::App* cmd) {
    cmd->add_option("--table", path, "count table (TSV: n<TAB>value)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--family", family, "family label recorded in the recurrence source");
    cmd->add_option("--shape", shape, "vsum (table holds vi counts) or v2sum (table holds piece counts)")
        ->check(CLI::IsMember({"vsum", "v2sum"}));
    cmd->add_option("--N", big_n, "use the table prefix 1..N (default: whole table)");
  }

  Recurrence build() const {
    const RecurrenceShape s = recurrence_shape_from_string(shape);
    const CountTable table =
        ingest_external(path, family, s == RecurrenceShape::vsum ? CountKind::vi : CountKind::piece);
    const std::size_t n = big_n == 0 ? table.size() : big_n;
    return s == RecurrenceShape::vsum ? build_recurrence_vsum(table, n) : build_recurrence_v2sum(table, n);
  }
};

std::size_t certify_cap_from_env() {
  if (const char* env = std::getenv("LATWB_CERTIFY_CAP")) return std::strtoul(env, nullptr, 10);
  return CertifyOptions{}.search_cap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice workbench: enumeration, vertical sums and certified lower bounds"};
  app.require_subcommand(1);
  std::string out_path;

  // gen
  auto* gen = app.add_subcommand("gen", "enumerate all n-element lattices of a family");
  std::size_t gen_n = 0;
  std::string gen_family = "all";
  bool gen_vi = false, gen_pieces = false;
  gen->add_option("n", gen_n, "number of elements")->required()->check(CLI::PositiveNumber);
  gen->add_option("--family", gen_family, "all, graded, modular, semimodular, distributive or graded-even-rank");
  gen->add_flag("--vi", gen_vi, "keep only vertically indecomposable lattices");
  gen->add_flag("--pieces", gen_pieces, "keep only pieces");
  gen->add_option("--out", out_path, "listing file (default: stdout)");

  // classify
  auto* cls = app.add_subcommand("classify", "report properties of every lattice in a listing");
  std::string cls_file;
  bool cls_pieces = false, cls_summary = false;
  cls->add_option("file", cls_file, "LATF listing")->required()->check(CLI::ExistingFile);
  cls->add_flag("--pieces", cls_pieces, "print only the number of pieces");
  cls->add_flag("--summary", cls_summary, "print only aggregate counts");

  // sum / sum2
  auto* sum = app.add_subcommand("sum", "vertical sums of every pair from two listings");
  auto* sum2 = app.add_subcommand("sum2", "vertical 2-sums of every admissible pair from two listings");
  std::string lower_file, upper_file, matching = "all";
  for (auto* cmd : {sum, sum2}) {
    cmd->add_option("lower", lower_file, "listing of lower summands")->required()->check(CLI::ExistingFile);
    cmd->add_option("upper", upper_file, "listing of upper summands")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_path, "listing file (default: stdout)");
  }
  sum2->add_option("--matching", matching, "parallel, crossed or all")
      ->check(CLI::IsMember({"parallel", "crossed", "all"}));

  // decompose
  auto* dec = app.add_subcommand("decompose", "split each lattice into its vertically indecomposable parts");
  std::string dec_file;
  dec->add_option("file", dec_file, "LATF listing")->required()->check(CLI::ExistingFile);
  dec->add_option("--out", out_path, "listing of the distinct components");

  // recur
  auto* recur = app.add_subcommand("recur", "build a lower-bound recurrence and evaluate it");
  TableArgs recur_table;
  std::size_t recur_n_max = 0;
  std::string recur_mode = "exact";
  long precision = 128;
  recur_table.attach(recur);
  recur->add_option("--n-max", recur_n_max, "evaluate f(1..n-max) (default: N)");
  recur->add_option("--mode", recur_mode, "exact or lower")->check(CLI::IsMember({"exact", "lower"}));
  recur->add_option("--precision", precision, "significand bits in lower mode");
  recur->add_option("--out", out_path, "TSV output (default: stdout)");

  // root
  auto* root = app.add_subcommand("root", "bracket the positive root of the auxiliary polynomial");
  TableArgs root_table;
  std::string tol_text = "1e-6";
  root_table.attach(root);
  root->add_option("--tol", tol_text, "bracket width");

  // certify
  auto* cert = app.add_subcommand("certify", "certify f(n) >= c^n for all large n");
  TableArgs cert_table;
  std::string c_text;
  std::optional<std::size_t> pinned_start;
  std::size_t search_cap = certify_cap_from_env();
  cert_table.attach(cert);
  cert->add_option("--c", c_text, "base, e.g. 2.2726 or 11363/5000")->required();
  cert->add_option("--start", pinned_start, "check only the window starting here");
  cert->add_option("--cap", search_cap, "largest window start searched (env LATWB_CERTIFY_CAP)");
  cert->add_option("--precision", precision, "significand bits for the window search");
  cert->add_option("--out", out_path, "certificate file (default: stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "recheck a certificate from scratch");
  std::string ver_file;
  ver->add_option("file", ver_file, "certificate file")->required()->check(CLI::ExistingFile);

  // paper
  auto* paper = app.add_subcommand("paper", "run the reproduction suite against the bundled dataset");
  std::vector<std::string> only;
  bool no_checksum = false, pin_start = false;
  std::string dataset_path = default_dataset_path().string();
  std::string export_dir;
  paper->add_option("--only", only, "run just these checks")->check(CLI::IsMember(paper_check_ids()));
  paper->add_flag("--no-checksum", no_checksum, "skip the dataset checksum (for tampered-data experiments)");
  paper->add_flag("--pin-start", pin_start, "certify at the published window starts");
  paper->add_option("--dataset", dataset_path, "dataset file");
  paper->add_option("--export", export_dir, "write the bundled tables as TSV files into this directory and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("Usage", e.what());
  }

  try {
    if (*gen) {
      const Family fam = Family::from_name(gen_family);
      LatticeEnumerator e(fam);
      std::vector<Lattice> selected;
      for (const Lattice& l : e.lattices(gen_n))
        if ((!gen_vi || is_vi(l)) && (!gen_pieces || is_piece(l))) selected.push_back(l);
      emit(out_path, [&](std::ostream& os) { render_listing(os, selected); });
      return 0;
    }

    if (*cls) {
      const auto lattices = read_listing(cls_file);
      const ClassificationSummary s = classify_listing(lattices);
      if (cls_pieces) {
        std::cout << "pieces\t" << s.pieces << '\n';
        return 0;
      }
      if (!cls_summary) {
        std::cout << "#\tn\tgraded\tmodular\tsemimodular\tdistributive\tvi\tpiece\n";
        for (std::size_t i = 0; i < lattices.size(); ++i) {
          const PropertyReport& r = s.reports[i];
          std::cout << i + 1 << '\t' << lattices[i].size() << '\t' << flag(r.graded.holds) << witness_text(r.graded)
                    << '\t' << flag(r.modular.holds) << witness_text(r.modular) << '\t' << flag(r.semimodular.holds)
                    << witness_text(r.semimodular) << '\t' << flag(r.distributive.holds) << witness_text(r.distributive)
                    << '\t' << flag(r.vertically_indecomposable.holds) << witness_text(r.vertically_indecomposable)
                    << '\t' << flag(r.piece) << '\n';
        }
      }
      std::cout << "total\t" << s.total << "\ngraded\t" << s.graded << "\nmodular\t" << s.modular
                << "\nsemimodular\t" << s.semimodular << "\ndistributive\t" << s.distributive << "\nvi\t" << s.vi
                << "\npieces\t" << s.pieces << '\n';
      return 0;
    }

    if (*sum || *sum2) {
      const auto lowers = read_listing(lower_file);
      const auto uppers = read_listing(upper_file);
      std::vector<Lattice> results;
      std::size_t skipped = 0;
      for (const Lattice& l : lowers) {
        for (const Lattice& u : uppers) {
          if (*sum) {
            results.push_back(vertical_sum(l, u));
            continue;
          }
          if (coatoms(l).size() != 2 || atoms(u).size() != 2) {
            ++skipped;
            continue;
          }
          if (matching == "all") {
            for (auto& x : vertical_2sums_all(l, u)) results.push_back(std::move(x));
          } else {
            results.push_back(vertical_2sum(l, u, matching == "parallel" ? Matching2::parallel : Matching2::crossed));
          }
        }
      }
      const auto out = sorted_unique(std::move(results));
      emit(out_path, [&](std::ostream& os) { render_listing(os, out); });
      if (skipped > 0) std::cerr << "skipped " << skipped << " pairs without two coatoms below and two atoms above\n";
      return 0;
    }

    if (*dec) {
      const auto lattices = read_listing(dec_file);
      std::vector<Lattice> components;
      for (std::size_t i = 0; i < lattices.size(); ++i) {
        std::cout << i + 1;
        if (lattices[i].size() == 1) {
          std::cout << "\t" << render_record(lattices[i]) << '\n';
          continue;
        }
        const auto parts = vertical_decompose(lattices[i]);
        for (std::size_t k = 0; k < parts.size(); ++k) {
          std::cout << (k == 0 ? "\t" : " + ") << render_record(parts[k]);
          components.push_back(parts[k]);
        }
        std::cout << '\n';
      }
      if (!out_path.empty()) {
        const auto distinct = sorted_unique(std::move(components));
        write_file_atomic(out_path, [&](std::ostream& os) { render_listing(os, distinct); });
      }
      return 0;
    }

    if (*recur) {
      const Recurrence rec = recur_table.build();
      const std::size_t n_max = recur_n_max == 0 ? rec.source_n : recur_n_max;
      const bool exact = recur_mode == "exact";
      const SequenceValues v = eval_sequence(rec, n_max, exact ? EvalMode::exact : EvalMode::rigorous_lower, precision);
      emit(out_path, [&](std::ostream& os) {
        for (std::size_t n = 1; n <= n_max; ++n)
          os << n << '\t' << (exact ? v.exact[n - 1].get_str() : v.lower[n - 1].to_string(30)) << '\n';
      });
      return 0;
    }

    if (*root) {
      const Recurrence rec = root_table.build();
      const Rational tol = parse_rational(tol_text);
      const RootBracket b = dominant_root(rec, tol);
      std::cout << "interval\t[" << decimal_floor(b.lo, 6) << ", " << decimal_ceil(b.hi, 6) << "]\n"
                << "lo\t" << b.lo.get_str() << "\nhi\t" << b.hi.get_str() << "\nsign-lo\t" << b.sign_lo
                << "\nsign-hi\t" << b.sign_hi << "\norder\t" << rec.order() << '\n';
      return 0;
    }

    if (*cert) {
      const Recurrence rec = cert_table.build();
      CertifyOptions opts;
      opts.search_cap = search_cap;
      opts.pinned_start = pinned_start;
      opts.precision_bits = precision;
      const BoundCertificate c = certify(rec, parse_rational(c_text), opts);
      emit(out_path, [&](std::ostream& os) { render_certificate(os, c); });
      std::cerr << "certified c = " << c.c.get_str() << " from n0 = " << c.window_start << '\n';
      return 0;
    }

    if (*ver) {
      auto in = open_input(ver_file);
      const BoundCertificate c = parse_certificate(in);
      const bool ok = verify_certificate(c);
      std::cout << (ok ? "pass" : "fail") << '\n';
      return ok ? 0 : kExitCheckFailed;
    }

    if (*paper) {
      const PaperDataset data = load_paper_dataset(dataset_path, !no_checksum);
      if (!export_dir.empty()) {
        fs::create_directories(export_dir);
        for (const auto& [name, table] : data.tables)
          write_file_atomic(fs::path(export_dir) / (name + ".tsv"),
                            [&](std::ostream& os) { render_count_table(os, table); });
        return 0;
      }
      SuiteOptions opts;
      opts.only = only;
      opts.pin_published_start = pin_start;
      opts.certify.search_cap = certify_cap_from_env();
      const auto entries = run_paper_suite(data, opts);
      render_suite_report(std::cout, entries);
      const bool all_pass = std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; });
      return all_pass ? 0 : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    return report_error(e.code(), e.what(), e.line());
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  } catch (const fs::filesystem_error& e) {
    return report_error("IoError", e.what());
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what());
  }
  return 0;
}
