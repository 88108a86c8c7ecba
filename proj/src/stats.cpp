#include "septic/dataset.hpp"
#include "septic/features.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace septic {

int complexityIndex(GaloisLabel g) {
  switch (g) {
    case GaloisLabel::C7: return 1;
    case GaloisLabel::D7: return 2;
    case GaloisLabel::F21: return 3;
    case GaloisLabel::F42: return 4;
    case GaloisLabel::PSL32: return 5;
    case GaloisLabel::A7: return 6;
    case GaloisLabel::S7: return 7;
  }
  return 0;
}

double logHeight(int height) { return std::log10(static_cast<double>(height) + 1.0); }

namespace {

constexpr int kHeightBins = 20;
constexpr double kDiscBinWidth = 1.0;

// Linear interpolation between order statistics (sorted input).
double quantile(const std::vector<double>& v, double q) {
  if (v.empty()) return std::nan("");
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(pos));
  const auto hi = static_cast<size_t>(std::ceil(pos));
  return v[lo] + (v[hi] - v[lo]) * (pos - static_cast<double>(lo));
}

std::ofstream openCsv(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + p.string());
  return out;
}

std::string labelName(const SepticRecord& r) { return r.label ? labelString(*r.label) : "unknown"; }

}  // namespace

std::vector<std::string> writeStats(const std::vector<SepticRecord>& records, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  if (records.empty()) std::cerr << "warning: empty database, writing header-only tables\n";

  std::map<std::string, std::vector<double>> heights;
  std::vector<double> discLogs;
  for (const auto& r : records) {
    heights[labelName(r)].push_back(logHeight(r.height));
    if (r.disc != 0) discLogs.push_back(log10Abs(r.disc));
  }
  for (auto& [label, v] : heights) std::sort(v.begin(), v.end());
  std::sort(discLogs.begin(), discLogs.end());
  std::vector<std::string> files;

  {
    auto out = openCsv(fs::path(dir) / "group_frequency.csv");
    out << "label,count,fraction\n";
    for (const auto& [label, v] : heights) {
      out << csvField(label) << ',' << v.size() << ','
          << formatReal(static_cast<double>(v.size()) / static_cast<double>(records.size())) << '\n';
    }
    files.emplace_back("group_frequency.csv");
  }
  {
    // shared bin edges so per-group histograms line up
    auto out = openCsv(fs::path(dir) / "height_histogram.csv");
    out << "label,bin_lo,bin_hi,count\n";
    double lo = 0.0;
    double hi = 0.0;
    bool any = false;
    for (const auto& [label, v] : heights) {
      if (v.empty()) continue;
      lo = any ? std::min(lo, v.front()) : v.front();
      hi = any ? std::max(hi, v.back()) : v.back();
      any = true;
    }
    const int bins = hi > lo ? kHeightBins : 1;
    const double width = hi > lo ? (hi - lo) / bins : 1.0;
    for (const auto& [label, v] : heights) {
      std::vector<long> count(static_cast<size_t>(bins), 0);
      for (double x : v) {
        auto b = static_cast<size_t>(std::min(bins - 1, static_cast<int>((x - lo) / width)));
        ++count[b];
      }
      for (int b = 0; b < bins; ++b) {
        out << csvField(label) << ',' << formatReal(lo + b * width) << ',' << formatReal(lo + (b + 1) * width) << ','
            << count[static_cast<size_t>(b)] << '\n';
      }
    }
    files.emplace_back("height_histogram.csv");
  }
  {
    auto out = openCsv(fs::path(dir) / "height_quartiles.csv");
    out << "label,count,min,q1,median,q3,max,mean\n";
    for (const auto& [label, v] : heights) {
      double mean = 0.0;
      for (double x : v) mean += x;
      mean /= static_cast<double>(v.size());
      out << csvField(label) << ',' << v.size() << ',' << formatReal(v.front()) << ',' << formatReal(quantile(v, 0.25)) << ','
          << formatReal(quantile(v, 0.5)) << ',' << formatReal(quantile(v, 0.75)) << ',' << formatReal(v.back())
          << ',' << formatReal(mean) << '\n';
    }
    files.emplace_back("height_quartiles.csv");
  }
  {
    auto out = openCsv(fs::path(dir) / "complexity_height.csv");
    out << "complexity,label,count,mean_log_height\n";
    for (GaloisLabel g : allLabels()) {
      auto it = heights.find(labelString(g));
      if (it == heights.end()) continue;
      double mean = 0.0;
      for (double x : it->second) mean += x;
      mean /= static_cast<double>(it->second.size());
      out << complexityIndex(g) << ',' << csvField(labelString(g)) << ',' << it->second.size() << ',' << formatReal(mean) << '\n';
    }
    files.emplace_back("complexity_height.csv");
  }
  {
    auto out = openCsv(fs::path(dir) / "disc_histogram.csv");
    out << "bin_lo,bin_hi,count\n";
    if (!discLogs.empty()) {
      const double lo = std::floor(discLogs.front() / kDiscBinWidth) * kDiscBinWidth;
      std::map<long, long> count;
      for (double x : discLogs) count[static_cast<long>(std::floor((x - lo) / kDiscBinWidth))]++;
      for (const auto& [b, n] : count) {
        out << formatReal(lo + static_cast<double>(b) * kDiscBinWidth) << ','
            << formatReal(lo + static_cast<double>(b + 1) * kDiscBinWidth) << ',' << n << '\n';
      }
    }
    files.emplace_back("disc_histogram.csv");
  }
  {
    auto out = openCsv(fs::path(dir) / "scatter.csv");
    out << "log_height,log10_abs_disc,label\n";
    for (const auto& r : records) {
      if (r.disc == 0) continue;
      out << formatReal(logHeight(r.height)) << ',' << formatReal(log10Abs(r.disc)) << ',' << csvField(labelName(r)) << '\n';
    }
    files.emplace_back("scatter.csv");
  }
  return files;
}

}  // namespace septic
