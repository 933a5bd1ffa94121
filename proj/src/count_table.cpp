#include "latwb/count_table.hpp"

namespace latwb {

const char* to_string(CountKind k) noexcept {
  switch (k) {
    case CountKind::total: return "total";
    case CountKind::vi: return "vi";
    case CountKind::piece: return "piece";
  }
  return "?";
}

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::enumerated: return "enumerated";
    case Provenance::paper: return "published";
    case Provenance::external_file: return "external-file";
    case Provenance::derived: return "derived";
  }
  return "?";
}

CountKind count_kind_from_string(const std::string& s) {
  if (s == "total") return CountKind::total;
  if (s == "vi") return CountKind::vi;
  if (s == "piece" || s == "pieces") return CountKind::piece;
  throw Error("UnknownKind", "unknown count kind '" + s + "'");
}

const BigInt& CountTable::at(std::size_t n) const {
  if (n == 0 || n > values.size())
    throw Error("IndexOutOfRange", "count table index " + std::to_string(n) + " outside 1.." +
                                       std::to_string(values.size()));
  return values[n - 1];
}

CountTable total_from_vi(const CountTable& vi) {
  CountTable total{vi.family, CountKind::total, Provenance::derived, {}};
  const std::size_t big_n = vi.size();
  if (big_n == 0) return total;
  total.values.assign(big_n, 0);
  total.values[0] = 1;
  for (std::size_t n = 2; n <= big_n; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 2; k <= n; ++k) sum += vi.values[k - 1] * total.values[n - k];
    total.values[n - 1] = sum;
  }
  return total;
}

CountTable vi_from_total(const CountTable& total) {
  CountTable vi{total.family, CountKind::vi, Provenance::derived, {}};
  if (total.size() == 0) return vi;
  if (total.values[0] != 1) throw Error("InvalidTable", "total(1) must be 1");
  vi.values.assign(total.size(), 0);
  vi.values[0] = 1;
  for (std::size_t n = 2; n <= total.size(); ++n) {
    // The k = n term of the convolution is vi(n) * total(1) = vi(n).
    BigInt rest = 0;
    for (std::size_t k = 2; k < n; ++k) rest += vi.values[k - 1] * total.values[n - k];
    BigInt value = total.values[n - 1] - rest;
    if (value < 0)
      throw Error("NegativeDeconvolution", "vi(" + std::to_string(n) + ") would be " + value.get_str());
    vi.values[n - 1] = value;
  }
  return vi;
}

}  // namespace latwb
