#include "septic/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <mpfr.h>

namespace septic {

double signedLog(double x) {
  if (x == 0.0) return 0.0;
  const double v = std::log10(1.0 + std::fabs(x));
  return x < 0 ? -v : v;
}

double signedLog(const BigRat& x) {
  if (x == 0) return 0.0;
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(t, t, MPFR_RNDN);
  mpfr_add_ui(t, t, 1, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  const double v = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return sgn(x) < 0 ? -v : v;
}

double log1pAbs10(const BigInt& n) { return std::fabs(signedLog(BigRat(n))); }

std::string formatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

FeatureRow extract(const SepticRecord& rec) {
  FeatureRow row;
  constexpr long kExactDoubleLimit = 1L << 53;
  for (size_t i = 0; i < 8; ++i) {
    row.coeffs[i] = std::to_string(rec.coeffs[i]);
    if (rec.coeffs[i] >= kExactDoubleLimit || rec.coeffs[i] <= -kExactDoubleLimit) row.exceedsFloat = true;
  }
  row.monic = rec.coeffs[0] == 1;
  row.discSign = sgn(rec.disc);
  row.discLog = log1pAbs10(rec.disc);
  for (size_t i = 0; i < 5; ++i) row.j[i] = signedLog(rec.xi[i]);
  row.label = rec.label ? labelString(*rec.label) : "unknown";
  return row;
}

std::string featuresHeader() { return "a7,a6,a5,a4,a3,a2,a1,a0,disc_sign,disc_log,j0,j1,j2,j3,j4,label"; }

std::string toCsvLine(const FeatureRow& row) {
  std::string out;
  for (const auto& c : row.coeffs) out += c + ",";
  out += std::to_string(row.discSign) + "," + formatReal(row.discLog);
  for (double j : row.j) out += "," + formatReal(j);
  out += "," + csvField(row.label);
  return out;
}

void writeFeatures(const std::vector<FeatureRow>& rows, std::ostream& csv, std::ostream* sidecar) {
  csv << featuresHeader() << '\n';
  if (sidecar) *sidecar << "row,monic,exceeds_float\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    csv << toCsvLine(rows[i]) << '\n';
    if (sidecar) *sidecar << i << ',' << (rows[i].monic ? 1 : 0) << ',' << (rows[i].exceedsFloat ? 1 : 0) << '\n';
  }
}

std::map<std::string, double> classWeights(const std::map<std::string, long long>& counts) {
  if (counts.empty()) throw DomainError("classWeights: no classes");
  std::vector<double> v;
  for (const auto& [label, n] : counts) {
    if (n <= 0) throw DomainError("classWeights: class '" + label + "' has no samples");
    v.push_back(static_cast<double>(n));
  }
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  const double median = v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  std::map<std::string, double> out;
  for (const auto& [label, n] : counts) out[label] = std::sqrt(median / static_cast<double>(n));
  return out;
}

Split stratifiedSplit(const std::vector<std::string>& labels, double trainFraction, std::uint64_t seed) {
  if (trainFraction <= 0.0 || trainFraction >= 1.0) throw DomainError("stratifiedSplit: fraction must lie in (0, 1)");
  std::map<std::string, std::vector<size_t>> byLabel;
  for (size_t i = 0; i < labels.size(); ++i) byLabel[labels[i]].push_back(i);
  for (const auto& [label, idx] : byLabel) {
    if (idx.size() < 2) throw DomainError("stratifiedSplit: label '" + label + "' has fewer than 2 rows");
  }
  // per-label floors, then the remaining rows by largest fractional part
  const auto total = static_cast<long long>(std::floor(trainFraction * static_cast<double>(labels.size()) + 1e-9));
  std::map<std::string, long long> take;
  std::vector<std::pair<double, std::string>> rema;
  long long assigned = 0;
  for (const auto& [label, idx] : byLabel) {
    const double exact = trainFraction * static_cast<double>(idx.size());
    take[label] = static_cast<long long>(std::floor(exact + 1e-9));
    assigned += take[label];
    rema.emplace_back(exact - static_cast<double>(take[label]), label);
  }
  std::stable_sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (size_t i = 0; assigned < total && i < rema.size(); ++i, ++assigned) take[rema[i].second]++;

  std::mt19937_64 rng(seed);
  Split out;
  for (auto& [label, idx] : byLabel) {
    for (size_t i = idx.size() - 1; i > 0; --i) std::swap(idx[i], idx[static_cast<size_t>(rng() % (i + 1))]);
    const auto k = static_cast<size_t>(take[label]);
    out.train.insert(out.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    out.test.insert(out.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace septic
