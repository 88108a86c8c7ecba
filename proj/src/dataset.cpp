#include "septic/dataset.hpp"

#include "septic/features.hpp"
#include "septic/resultant.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

namespace septic {

BigInt countPrimitive(int n, int h) {
  if (n < 1 || h < 1) throw DomainError("countPrimitive: n and h must be positive");
  static std::mutex mu;
  static std::map<std::pair<int, int>, BigInt> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, h}); it != memo.end()) return it->second;
  }
  BigInt a;
  BigInt b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(2 * h + 1), static_cast<unsigned long>(n + 1));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(2 * h - 1), static_cast<unsigned long>(n + 1));
  BigInt out = (a - b) / 2;
  for (int d = 2; d <= h; ++d) {
    if (h % d == 0) out -= countPrimitive(n, h / d);
  }
  std::lock_guard lock(mu);
  memo[{n, h}] = out;
  return out;
}

BigInt countPrimitiveUpTo(int n, int h) {
  BigInt s = 0;
  for (int k = 1; k <= h; ++k) s += countPrimitive(n, k);
  return s;
}

IntPoly toPoly(const Coeffs8& c) {
  std::vector<BigInt> asc(8);
  for (size_t i = 0; i < 8; ++i) asc[7 - i] = c[i];
  return IntPoly(std::move(asc));
}

std::vector<std::pair<long, long>> enumerationSlices(const EnumerateOptions& opt) {
  if (opt.height < 1) throw DomainError("enumerate: height must be at least 1");
  const long h = opt.height;
  const long topLead = opt.mode == EnumerationMode::Monic ? 1 : h;
  std::vector<std::pair<long, long>> out;
  for (long a7 = 1; a7 <= topLead; ++a7) {
    for (long a6 = -h; a6 <= h; ++a6) out.emplace_back(a7, a6);
  }
  return out;
}

void enumerateSlice(const EnumerateOptions& opt, std::pair<long, long> slice,
                    const std::function<void(const Coeffs8&)>& visit) {
  const long h = opt.height;
  Coeffs8 c{};
  c[0] = slice.first;
  c[1] = slice.second;
  for (size_t i = 2; i < 8; ++i) c[i] = -h;
  for (;;) {
    if (c[7] != 0) {
      long g = 0;
      long top = 0;
      for (long v : c) {
        g = std::gcd(g, v);
        top = std::max(top, std::labs(v));
      }
      if (g == 1 && (!opt.exactHeight || top == h)) visit(c);
    }
    size_t i = 7;
    while (i >= 2 && c[i] == h) c[i--] = -h;
    if (i < 2) break;
    ++c[i];
  }
}

void enumerate(const EnumerateOptions& opt, const std::function<void(const Coeffs8&)>& visit) {
  for (const auto& s : enumerationSlices(opt)) enumerateSlice(opt, s, visit);
}

void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& work) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string labelOrUnknown(const std::optional<GaloisLabel>& l) { return l ? labelString(*l) : "unknown"; }

}  // namespace

EnumerationCount countEnumeration(const EnumerateOptions& opt, int jobs) {
  const auto slices = enumerationSlices(opt);
  std::vector<EnumerationCount> part(slices.size());
  parallelFor(slices.size(), jobs, [&](std::size_t i) {
    enumerateSlice(opt, slices[i], [&](const Coeffs8& c) {
      ++part[i].tuples;
      if (isIrreducibleDeg7(toPoly(c))) ++part[i].irreducible;
    });
  });
  EnumerationCount total;
  for (const auto& p : part) {
    total.tuples += p.tuples;
    total.irreducible += p.irreducible;
  }
  return total;
}

SepticRecord annotate(const Coeffs8& c) {
  const IntPoly f = toPoly(c);
  SepticRecord r;
  r.coeffs = c;
  r.height = static_cast<int>(f.height().get_si());
  r.disc = discriminant7(f);
  r.sig = signature(f);
  r.xi = invariantsXi(f);
  try {
    const Classification cl = classifyStaged(f);
    r.label = cl.label;
    r.method = cl.method;
  } catch (const std::exception& e) {
    r.method = std::string("failed: ") + e.what();
  }
  return r;
}

std::string toJsonLine(const SepticRecord& r) {
  nlohmann::ordered_json j;
  auto coeffs = nlohmann::json::array();
  for (long v : r.coeffs) coeffs.push_back(std::to_string(v));
  j["coeffs"] = std::move(coeffs);
  j["height"] = r.height;
  j["disc"] = r.disc.get_str();
  j["sig"] = r.sig;
  auto xi = nlohmann::json::array();
  for (const auto& x : r.xi) xi.push_back(ratToString(x));
  j["xi"] = std::move(xi);
  j["label"] = labelOrUnknown(r.label);
  j["method"] = r.method;
  return j.dump();
}

SepticRecord parseJsonLine(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  SepticRecord r;
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != 8) throw std::invalid_argument("record needs 8 coefficients");
  for (size_t i = 0; i < 8; ++i) r.coeffs[i] = std::stol(coeffs[i].get<std::string>());
  r.height = j.at("height").get<int>();
  r.disc = parseBigInt(j.at("disc").get<std::string>());
  r.sig = j.at("sig").get<int>();
  const auto& xi = j.at("xi");
  if (xi.size() != 5) throw std::invalid_argument("record needs 5 invariants");
  for (size_t i = 0; i < 5; ++i) r.xi[i] = parseRat(xi[i].get<std::string>());
  r.label = parseLabel(j.at("label").get<std::string>());
  r.method = j.value("method", "");
  return r;
}

std::string csvHeader() {
  return "a7,a6,a5,a4,a3,a2,a1,a0,height,log10_abs_disc,disc_sign,sig,xi0,xi1,xi2,xi3,xi4,label";
}

std::string toCsvLine(const SepticRecord& r) {
  std::string out;
  for (long v : r.coeffs) out += std::to_string(v) + ",";
  out += std::to_string(r.height) + ",";
  out += (r.disc == 0 ? std::string("nan") : formatReal(log10Abs(r.disc))) + ",";
  out += std::to_string(sgn(r.disc)) + "," + std::to_string(r.sig);
  for (const auto& x : r.xi) out += "," + formatReal(signedLog(x));
  out += "," + csvField(labelOrUnknown(r.label));
  return out;
}

namespace {

struct Checkpoint {
  std::size_t slicesDone = 0;
  BuildSummary summary;
};

Checkpoint readCheckpoint(const std::string& path) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  const auto j = nlohmann::json::parse(in);
  cp.slicesDone = j.at("slices_done").get<std::size_t>();
  cp.summary.tuples = j.at("tuples").get<long long>();
  cp.summary.records = j.at("records").get<long long>();
  cp.summary.labelCounts = j.at("labels").get<std::map<std::string, long long>>();
  return cp;
}

void writeCheckpoint(const std::string& path, const Checkpoint& cp) {
  nlohmann::json j = {{"slices_done", cp.slicesDone},
                      {"tuples", cp.summary.tuples},
                      {"records", cp.summary.records},
                      {"labels", cp.summary.labelCounts}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot replace checkpoint " + path);
}

struct SliceOutput {
  long long tuples = 0;
  std::vector<SepticRecord> records;
};

}  // namespace

BuildSummary buildDatabase(const BuildOptions& opt, std::ostream& jsonl, std::ostream* csv) {
  const auto start = std::chrono::steady_clock::now();
  const auto slices = enumerationSlices(opt.enumeration);
  Checkpoint cp;
  if (!opt.checkpointPath.empty()) cp = readCheckpoint(opt.checkpointPath);
  if (cp.slicesDone == 0 && csv) *csv << csvHeader() << '\n';

  const std::size_t batch = static_cast<std::size_t>(std::max(1, opt.jobs)) * 4;
  for (std::size_t lo = cp.slicesDone; lo < slices.size(); lo += batch) {
    const std::size_t hi = std::min(slices.size(), lo + batch);
    std::vector<SliceOutput> outs(hi - lo);
    parallelFor(hi - lo, opt.jobs, [&](std::size_t k) {
      enumerateSlice(opt.enumeration, slices[lo + k], [&](const Coeffs8& c) {
        ++outs[k].tuples;
        if (isIrreducibleDeg7(toPoly(c))) outs[k].records.push_back(annotate(c));
      });
    });
    for (const auto& o : outs) {
      cp.summary.tuples += o.tuples;
      for (const auto& r : o.records) {
        jsonl << toJsonLine(r) << '\n';
        if (csv) *csv << toCsvLine(r) << '\n';
        ++cp.summary.records;
        cp.summary.labelCounts[labelOrUnknown(r.label)]++;
      }
    }
    jsonl.flush();
    if (!jsonl) throw std::runtime_error("write error on database output");
    if (csv) csv->flush();
    cp.slicesDone = hi;
    if (!opt.checkpointPath.empty()) writeCheckpoint(opt.checkpointPath, cp);
  }
  cp.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cp.summary;
}

std::vector<SepticRecord> readDatabase(std::istream& in) {
  std::vector<SepticRecord> out;
  std::string line;
  long lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    try {
      out.push_back(parseJsonLine(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("database line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace septic
