#pragma once

// Height-bounded septic enumeration, the primitive-point counting formula,
// annotated database construction and its JSONL/CSV persistence.

#include "septic/classify.hpp"
#include "septic/forms.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace septic {

/// Primitive integer points of P^n of exact height h, counted up to sign.
BigInt countPrimitive(int n, int h);
/// Sum of countPrimitive(n, k) for k <= h.
BigInt countPrimitiveUpTo(int n, int h);

/// Descending a7..a0.
using Coeffs8 = std::array<long, 8>;

IntPoly toPoly(const Coeffs8& c);

enum class EnumerationMode {
  /// Primitive tuples up to sign (a7 > 0), the counting-formula convention.
  Projective,
  /// a7 = 1, the convention of the irreducible-count table.
  Monic,
};

struct EnumerateOptions {
  int height = 1;
  bool exactHeight = false;
  EnumerationMode mode = EnumerationMode::Projective;
};

/// Work units in enumeration order: one per (a7, a6) pair.
std::vector<std::pair<long, long>> enumerationSlices(const EnumerateOptions& opt);
/// Visits every tuple of one slice in lexicographic order with a0 != 0.
void enumerateSlice(const EnumerateOptions& opt, std::pair<long, long> slice,
                    const std::function<void(const Coeffs8&)>& visit);
/// Visits every tuple of every slice, in order.
void enumerate(const EnumerateOptions& opt, const std::function<void(const Coeffs8&)>& visit);

/// Runs work(i) for i in [0, n) on `jobs` threads; rethrows the first failure.
void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& work);

struct EnumerationCount {
  long long tuples = 0;
  long long irreducible = 0;
};

/// Counts tuples and irreducible ones, split across `jobs` threads.
EnumerationCount countEnumeration(const EnumerateOptions& opt, int jobs);

struct SepticRecord {
  Coeffs8 coeffs{};
  int height = 0;
  BigInt disc;
  int sig = 0;
  InvariantVector xi;
  std::optional<GaloisLabel> label;
  std::string method;
};

/// Annotates an irreducible septic: discriminant, signature, invariants
/// and the staged classification (label unset when it fails).
SepticRecord annotate(const Coeffs8& c);

std::string toJsonLine(const SepticRecord& r);
SepticRecord parseJsonLine(const std::string& line);
std::string csvHeader();
std::string toCsvLine(const SepticRecord& r);

struct BuildOptions {
  EnumerateOptions enumeration;
  int jobs = 1;
  /// When set, progress is recorded here after every batch of slices and a
  /// rerun resumes after the last completed batch (output is appended).
  std::string checkpointPath;
};

struct BuildSummary {
  long long tuples = 0;
  long long records = 0;
  std::map<std::string, long long> labelCounts;
  double seconds = 0.0;
};

BuildSummary buildDatabase(const BuildOptions& opt, std::ostream& jsonl, std::ostream* csv = nullptr);

std::vector<SepticRecord> readDatabase(std::istream& in);

/// Complexity index used by the statistics tables (ascending group order).
int complexityIndex(GaloisLabel g);
/// log10(H + 1)
double logHeight(int height);

/// Writes the aggregate CSV tables into `dir`; returns the file names.
std::vector<std::string> writeStats(const std::vector<SepticRecord>& records, const std::string& dir);

}  // namespace septic
