#pragma once

// Feature rows for the downstream classifier and the CSV contract it reads:
//
//   a7,a6,a5,a4,a3,a2,a1,a0,disc_sign,disc_log,j0,j1,j2,j3,j4,label
//
// j_i is signedLog(xi_i), disc_log is log10(1 + |disc|); reals carry 12
// significant digits.

#include "septic/dataset.hpp"

#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace septic {

/// sign(x) * log10(1 + |x|)
double signedLog(double x);
/// signedLog of an exact rational, without overflowing for huge values.
double signedLog(const BigRat& x);
/// log10(1 + |n|), exact-input version.
double log1pAbs10(const BigInt& n);

/// "%.12g"
std::string formatReal(double v);

/// RFC 4180 quoting when needed: PSL(3,2) becomes "PSL(3,2)".
std::string csvField(const std::string& s);

struct FeatureRow {
  /// Descending a7..a0 as decimal strings (raw, never rounded).
  std::array<std::string, 8> coeffs;
  int discSign = 0;
  double discLog = 0.0;
  std::array<double, 5> j{};
  std::string label;
  /// a7 == 1
  bool monic = false;
  /// Some coefficient is not exactly representable as a double.
  bool exceedsFloat = false;
};

FeatureRow extract(const SepticRecord& rec);

std::string featuresHeader();
std::string toCsvLine(const FeatureRow& row);
/// Writes the contract CSV and, when `sidecar` is given, "row,monic,exceeds_float".
void writeFeatures(const std::vector<FeatureRow>& rows, std::ostream& csv, std::ostream* sidecar = nullptr);

/// w(c) = sqrt(median count / count(c)).
std::map<std::string, double> classWeights(const std::map<std::string, long long>& counts);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per-label seeded shuffle; each label keeps floor(fraction * n_label)
/// training rows, topped up by largest remainder to floor(fraction * n).
/// Indices are returned in ascending order.
Split stratifiedSplit(const std::vector<std::string>& labels, double trainFraction, std::uint64_t seed);

}  // namespace septic
