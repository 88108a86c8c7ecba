#include "septic/cli.hpp"

#include "septic/classify.hpp"
#include "septic/dataset.hpp"
#include "septic/families.hpp"
#include "septic/features.hpp"
#include "septic/lmfdb.hpp"
#include "septic/resultant.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace septic::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void logLine(std::ostream& err, const std::string& level, const std::string& msg,
             const nlohmann::ordered_json& extra = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json j;
  j["level"] = level;
  j["msg"] = msg;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  err << j.dump() << '\n';
}

IntPoly readCoeffs(const std::string& text, bool ascending) {
  try {
    return parseCoeffs(text, ascending);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Classification classifyWith(const IntPoly& f, const std::string& method) {
  if (method == "foulkes") return classifyFoulkes(f);
  if (method == "resolvent35") return classify35(f);
  if (method == "modp") return modpCensus(f);
  return classifyStaged(f);
}

// Output goes to --out when given, else to the command's stdout.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    os_ = &file_;
  }
  std::ostream& get() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

std::vector<SepticRecord> loadDatabase(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return readDatabase(in);
}

int defaultJobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

int selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };
  auto guarded = [&](const std::string& name, const std::function<bool()>& body) {
    try {
      check(name, body());
    } catch (const std::exception& e) {
      check(name + " (" + e.what() + ")", false);
    }
  };

  guarded("35-ic e1 and e2 coefficients", [] {
    for (const auto* text : {"1,3,-2,5,0,1,-4,7", "1,-1,0,0,2,0,-3,1", "1,0,0,0,0,0,-1,-1"}) {
      const IntPoly f = parseCoeffs(text);
      const IntPoly r = resolvent35Symbolic(f);
      const BigInt e1 = -r[34];
      const BigInt e2 = r[33];
      if (e1 != -15 * f[6] || e2 != 105 * f[6] * f[6] + 10 * f[5]) return false;
    }
    return true;
  });
  guarded("cyclic period polynomials (28 primes)", [] {
    for (const auto& row : cyclicTable()) {
      if (!(cyclotomicC7(row.prime) == row.poly) || row.poly.height() != row.height) return false;
    }
    return true;
  });
  guarded("height-16 minimum is C7:C3", [] {
    return classifyStaged(parseCoeffs("1,0,-8,-2,16,6,-6,-2")).label == GaloisLabel::F21;
  });
  guarded("x^7 - 2 is C7:C6", [] { return classifyFoulkes(parseCoeffs("1,0,0,0,0,0,0,-2")).label == GaloisLabel::F42; });
  guarded("3-set orbit partitions", [] {
    const std::map<GaloisLabel, FactorPattern> expected = {
        {GaloisLabel::C7, FactorPattern({7, 7, 7, 7, 7})}, {GaloisLabel::D7, FactorPattern({7, 7, 7, 14})},
        {GaloisLabel::F21, FactorPattern({7, 7, 21})},     {GaloisLabel::F42, FactorPattern({14, 21})},
        {GaloisLabel::PSL32, FactorPattern({7, 28})},      {GaloisLabel::A7, FactorPattern({35})},
        {GaloisLabel::S7, FactorPattern({35})}};
    for (const auto& [g, p] : expected) {
      if (!(orbitPartitionOn3Sets(catalogGroup(g)) == p)) return false;
    }
    return true;
  });
  guarded("G7(1, 1) coefficients", [] {
    return toCoeffString(chebyshevG7({1, 1})) == "64,0,-896,0,3584,0,-3584,-512";
  });
  return failures;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois groups of septics: classification, resolvents, databases, families"};
  app.require_subcommand(1);

  // shared
  std::string coeffs;
  bool ascending = false;
  std::string outPath;
  std::string format = "jsonl";
  int jobs = defaultJobs();
  std::uint64_t seed = 1;

  auto* enumerate = app.add_subcommand("enumerate", "septics of bounded height");
  int height = 1;
  bool exactHeight = false;
  bool irreducibleOnly = false;
  bool countOnly = false;
  bool deep = false;
  std::string mode = "monic";
  std::string checkpoint;
  std::string csvPath;
  enumerate->add_option("--height", height, "height bound")->required()->check(CLI::Range(1, 1000));
  enumerate->add_flag("--exact-height", exactHeight, "only polynomials of height exactly --height");
  enumerate->add_option("--mode", mode, "monic or projective (primitive, up to sign)")
      ->check(CLI::IsMember({"monic", "projective"}));
  enumerate->add_flag("--irreducible", irreducibleOnly, "count irreducible polynomials only");
  enumerate->add_flag("--count-only", countOnly, "print the count instead of records");
  enumerate->add_flag("--deep", deep, "allow heights above 2 (long running)");
  enumerate->add_option("--checkpoint", checkpoint, "resumable progress file");
  enumerate->add_option("--csv", csvPath, "also write the CSV projection here");
  enumerate->add_option("--out", outPath, "output file (default stdout)");
  enumerate->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Galois group of an irreducible septic");
  std::string method = "staged";
  std::string inPath;
  classify->add_option("--coeffs", coeffs, "a7,...,a0");
  classify->add_option("--in", inPath, "file with one coefficient list per line");
  classify->add_flag("--ascending", ascending, "coefficients are a0,...,a7");
  classify->add_option("--method", method, "foulkes, resolvent35, modp or staged")
      ->check(CLI::IsMember({"foulkes", "resolvent35", "modp", "staged"}));
  classify->add_option("--out", outPath, "output file (default stdout)");
  classify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--seed", seed, "accepted for reproducibility; all methods are deterministic");

  auto* resolvent = app.add_subcommand("resolvent", "resolvent polynomial dump");
  std::string kind = "threeset35";
  long precision = 100;
  bool symbolic = false;
  int tschirnhausenSeed = 0;
  resolvent->add_option("--coeffs", coeffs, "a7,...,a0")->required();
  resolvent->add_flag("--ascending", ascending, "coefficients are a0,...,a7");
  resolvent->add_option("--kind", kind, "quadratic, thirty, onetwenty or threeset35")
      ->check(CLI::IsMember({"quadratic", "thirty", "onetwenty", "threeset35"}));
  resolvent->add_option("--precision", precision, "starting precision in decimal digits")->check(CLI::Range(30L, 100000L));
  resolvent->add_flag("--symbolic", symbolic, "exact power-sum construction (threeset35 only)");
  resolvent->add_option("--seed", tschirnhausenSeed, "apply this Tschirnhausen transformation first (0 = none)");
  resolvent->add_option("--out", outPath, "output file (default stdout)");

  auto* invariants = app.add_subcommand("invariants", "discriminant, signature and the invariants xi0..xi4");
  invariants->add_option("--coeffs", coeffs, "a7,...,a0")->required();
  invariants->add_flag("--ascending", ascending, "coefficients are a0,...,a7");

  auto* family = app.add_subcommand("family", "septics with prescribed solvable group");
  family->require_subcommand(1);
  auto* c7 = family->add_subcommand("c7", "cyclic septic from Gaussian periods");
  long prime = 29;
  c7->add_option("--prime", prime, "prime p = 1 mod 7")->required();
  auto* f21 = family->add_subcommand("f21", "Chebyshev C7:C3 member");
  long u = 1;
  long v = 1;
  f21->add_option("--u", u)->required();
  f21->add_option("--v", v)->required();

  auto* features = app.add_subcommand("features", "export the learner feature CSV from a database");
  std::string sidecarPath;
  std::string weightsPath;
  features->add_option("--in", inPath, "database (JSONL)")->required();
  features->add_option("--out", outPath, "features.csv (default stdout)");
  features->add_option("--sidecar", sidecarPath, "per-row monic / precision flags");
  features->add_option("--weights", weightsPath, "class weights as JSON");

  auto* stats = app.add_subcommand("stats", "aggregate CSV tables from a database");
  stats->add_option("--in", inPath, "database (JSONL)")->required();
  stats->add_option("--out", outPath, "output directory")->required();

  auto* lmfdb = app.add_subcommand("lmfdb", "fetch degree-7 fields from the LMFDB (cached)");
  long offset = 0;
  int limit = 10;
  bool offline = false;
  bool check = false;
  std::vector<std::string> filters;
  lmfdb->add_option("--offset", offset)->check(CLI::NonNegativeNumber);
  lmfdb->add_option("--limit", limit)->check(CLI::Range(1, 10000));
  lmfdb->add_flag("--offline", offline, "serve from the cache only");
  lmfdb->add_option("--filter", filters, "extra query parameter key=value")->allow_extra_args(false);
  lmfdb->add_flag("--check", check, "reclassify each record locally and compare");
  lmfdb->add_option("--out", outPath, "output file (default stdout)");

  auto* selftestCmd = app.add_subcommand("selftest", "golden-vector self check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      if (height > 2 && !deep) throw UsageError("heights above 2 are long running; pass --deep");
      EnumerateOptions opt;
      opt.height = height;
      opt.exactHeight = exactHeight;
      opt.mode = mode == "monic" ? EnumerationMode::Monic : EnumerationMode::Projective;
      if (countOnly) {
        const auto c = countEnumeration(opt, jobs);
        Sink sink(outPath, out);
        sink.get() << (irreducibleOnly ? c.irreducible : c.tuples) << '\n';
        return 0;
      }
      if (!irreducibleOnly) logLine(err, "info", "records are written for irreducible polynomials only");
      BuildOptions bo;
      bo.enumeration = opt;
      bo.jobs = jobs;
      bo.checkpointPath = checkpoint;
      Sink sink(outPath, out);
      std::ofstream csvFile;
      std::ostream* csv = nullptr;
      BuildSummary s;
      if (format == "csv") {
        std::ostringstream discard;
        s = buildDatabase(bo, discard, &sink.get());
      } else {
        if (!csvPath.empty()) {
          csvFile.open(csvPath, std::ios::trunc);
          if (!csvFile) throw std::runtime_error("cannot open " + csvPath);
          csv = &csvFile;
        }
        s = buildDatabase(bo, sink.get(), csv);
      }
      nlohmann::ordered_json labels(s.labelCounts);
      logLine(err, "info", "database built",
              {{"tuples", s.tuples}, {"records", s.records}, {"labels", labels}, {"seconds", s.seconds}});
      return 0;
    }

    if (classify->parsed()) {
      std::vector<std::string> inputs;
      if (!coeffs.empty()) inputs.push_back(coeffs);
      if (!inPath.empty()) {
        std::ifstream in(inPath);
        if (!in) throw UsageError("cannot read " + inPath);
        for (std::string line; std::getline(in, line);) {
          if (!line.empty() && line[0] != '#') inputs.push_back(line);
        }
      }
      if (inputs.empty()) throw UsageError("classify needs --coeffs or --in");
      std::vector<IntPoly> polys;
      for (const auto& text : inputs) polys.push_back(readCoeffs(text, ascending));
      std::vector<std::string> results(polys.size());
      parallelFor(polys.size(), jobs, [&](std::size_t i) { results[i] = toJson(classifyWith(polys[i], method)); });
      Sink sink(outPath, out);
      for (const auto& r : results) sink.get() << r << '\n';
      return 0;
    }

    if (resolvent->parsed()) {
      IntPoly f = readCoeffs(coeffs, ascending);
      const ResolventKind k = *parseKind(kind);
      if (f.degree() != 7) throw DomainError("resolvents need a septic");
      const IntPoly model = monicModel(f.primitivePart());
      if (!(model == f)) logLine(err, "info", "using the monic model", {{"model", toCoeffString(model)}});
      IntPoly g = tschirnhausenSeed ? tschirnhausen(model, tschirnhausenSeed) : model;
      IntPoly r;
      if (symbolic) {
        if (k != ResolventKind::ThreeSet35) throw UsageError("--symbolic is only available for threeset35");
        r = resolvent35Symbolic(g);
      } else {
        auto nr = resolventNumeric(g, k, precision);
        if (nr.tschirnhausenSeed) {
          logLine(err, "info", "resolvent was not squarefree; used a Tschirnhausen transform",
                  {{"seed", nr.tschirnhausenSeed}});
        }
        r = nr.poly;
      }
      Sink sink(outPath, out);
      sink.get() << resolventDump(k, r) << '\n';
      return 0;
    }

    if (invariants->parsed()) {
      const IntPoly f = readCoeffs(coeffs, ascending);
      if (f.degree() != 7) throw DomainError("invariants need a septic");
      nlohmann::ordered_json j;
      j["disc"] = discriminant(f).get_str();
      j["sig"] = signature(f);
      const auto xi = toStrings(invariantsXi(f));
      j["xi"] = std::vector<std::string>(xi.begin(), xi.end());
      out << j.dump() << '\n';
      return 0;
    }

    if (c7->parsed()) {
      out << toCoeffString(cyclotomicC7(prime)) << '\n';
      return 0;
    }
    if (f21->parsed()) {
      ChebyshevParams p{u, v};
      if (!p.admissible()) logLine(err, "warn", "parameters are not admissible; the group need not be C7:C3");
      out << toCoeffString(chebyshevG7(p)) << '\n';
      return 0;
    }

    if (features->parsed()) {
      const auto records = loadDatabase(inPath);
      std::vector<FeatureRow> rows;
      std::map<std::string, long long> counts;
      for (const auto& r : records) {
        if (!r.label) continue;
        rows.push_back(extract(r));
        ++counts[rows.back().label];
      }
      if (rows.size() != records.size()) {
        logLine(err, "warn", "skipped unlabeled records", {{"skipped", records.size() - rows.size()}});
      }
      Sink sink(outPath, out);
      std::ofstream side;
      if (!sidecarPath.empty()) {
        side.open(sidecarPath, std::ios::trunc);
        if (!side) throw std::runtime_error("cannot open " + sidecarPath);
      }
      writeFeatures(rows, sink.get(), sidecarPath.empty() ? nullptr : &side);
      if (!weightsPath.empty() && !counts.empty()) {
        std::ofstream w(weightsPath, std::ios::trunc);
        w << nlohmann::ordered_json(classWeights(counts)).dump(2) << '\n';
      }
      return 0;
    }

    if (stats->parsed()) {
      const auto files = writeStats(loadDatabase(inPath), outPath);
      for (const auto& f : files) out << f << '\n';
      return 0;
    }

    if (lmfdb->parsed()) {
      LmfdbConfig cfg = LmfdbConfig::fromEnvironment();
      cfg.offline = offline;
      for (const auto& kv : filters) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("filter must be key=value, got '" + kv + "'");
        cfg.filters[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      LmfdbClient client(cfg);
      const std::string request = client.requestPath(7, offset, limit);
      const auto fields = client.fetchPage(7, offset, limit);
      logLine(err, "info", "fetched", {{"request", cfg.baseUrl + request}, {"records", fields.size()}});
      Sink sink(outPath, out);
      int disagreements = 0;
      for (const auto& f : fields) {
        nlohmann::ordered_json j;
        j["label"] = f.label;
        std::vector<std::string> c;
        for (int i = f.poly.degree(); i >= 0; --i) c.push_back(f.poly[i].get_str());
        j["coeffs"] = c;
        j["disc"] = f.discriminant.get_str();
        j["galois_label"] = f.galoisLabelRaw;
        const auto mapped = fromTransitiveLabel(f.galoisLabelRaw);
        j["group"] = mapped ? labelString(*mapped) : "unknown";
        j["fetched_at"] = f.fetchedAt;
        j["query"] = request;
        if (check) {
          const auto local = classifyStaged(f.poly);
          j["local"] = labelString(local.label);
          if (!mapped || *mapped != local.label) {
            ++disagreements;
            logLine(err, "error", "local classification disagrees with the remote label",
                    {{"field", f.label}, {"remote", f.galoisLabelRaw}, {"local", labelString(local.label)},
                     {"method", local.method}});
          }
        }
        sink.get() << j.dump() << '\n';
      }
      return disagreements ? 1 : 0;
    }

    if (selftestCmd->parsed()) return selftest(out) ? 1 : 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    logLine(err, "error", e.what());
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"septic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace septic::cli
