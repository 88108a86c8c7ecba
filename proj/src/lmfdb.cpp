#include "septic/lmfdb.hpp"

#include "httplib.h"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace septic {

namespace {

constexpr const char* kDefaultBase = "https://www.lmfdb.org";
constexpr const char* kDefaultCache = ".lmfdb-cache";

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string isoNow() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BigInt jsonInteger(const nlohmann::json& v) {
  if (v.is_string()) return parseBigInt(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long>());
  throw LmfdbError(LmfdbError::Kind::Parse, "expected an integer, got " + v.dump());
}

std::string urlEncode(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

}  // namespace

std::optional<GaloisLabel> fromTransitiveLabel(std::string_view t) {
  if (t.size() != 3 || t[0] != '7' || t[1] != 'T' || t[2] < '1' || t[2] > '7') return std::nullopt;
  return allLabels()[static_cast<size_t>(t[2] - '1')];
}

std::string toTransitiveLabel(GaloisLabel g) {
  for (size_t i = 0; i < allLabels().size(); ++i) {
    if (allLabels()[i] == g) return "7T" + std::to_string(i + 1);
  }
  return "?";
}

LmfdbConfig LmfdbConfig::fromEnvironment() {
  LmfdbConfig c;
  const char* url = std::getenv("SEPTIC_LMFDB_URL");
  const char* cache = std::getenv("SEPTIC_LMFDB_CACHE");
  c.baseUrl = url && *url ? url : kDefaultBase;
  c.cacheDir = cache && *cache ? cache : kDefaultCache;
  return c;
}

std::vector<RemoteField> parseFieldsResponse(const std::string& body, const std::string& fetchedAt) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw LmfdbError(LmfdbError::Kind::Parse, std::string("response is not JSON: ") + e.what());
  }
  if (!j.contains("data") || !j["data"].is_array()) {
    throw LmfdbError(LmfdbError::Kind::Parse, "response has no data array");
  }
  std::vector<RemoteField> out;
  for (const auto& item : j["data"]) {
    try {
      RemoteField f;
      f.label = item.value("label", "");
      std::vector<BigInt> asc;
      for (const auto& c : item.at("coeffs")) asc.push_back(jsonInteger(c));
      f.poly = IntPoly(std::move(asc));
      BigInt disc = jsonInteger(item.at("disc_abs"));
      if (item.value("disc_sign", 1) < 0) disc = -disc;
      f.discriminant = disc;
      f.galoisLabelRaw = item.contains("galois_label") ? item["galois_label"].get<std::string>() : "";
      f.fetchedAt = fetchedAt;
      out.push_back(std::move(f));
    } catch (const nlohmann::json::exception& e) {
      throw LmfdbError(LmfdbError::Kind::Parse, std::string("malformed field record: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw LmfdbError(LmfdbError::Kind::Parse, std::string("malformed field record: ") + e.what());
    }
  }
  return out;
}

LmfdbClient::LmfdbClient(LmfdbConfig config) : config_(std::move(config)) {}

std::string LmfdbClient::requestPath(int degree, long offset, int limit) const {
  std::ostringstream os;
  os << "/api/nf_fields/?_format=json&degree=" << degree << "&_offset=" << offset << "&_limit=" << limit
     << "&_fields=label,coeffs,disc_abs,disc_sign,galois_label";
  for (const auto& [k, v] : config_.filters) os << '&' << urlEncode(k) << '=' << urlEncode(v);
  return os.str();
}

std::string LmfdbClient::cachePath(const std::string& request) const {
  return (std::filesystem::path(config_.cacheDir) / (fnv1a(config_.baseUrl + request) + ".json")).string();
}

std::string LmfdbClient::get(const std::string& request) {
  httplib::Client cli(config_.baseUrl);
  cli.set_connection_timeout(10);
  cli.set_read_timeout(60);
  cli.set_follow_location(true);
  int delay = config_.initialBackoffMs;
  std::string lastError;
  for (int attempt = 0; attempt <= config_.maxRetries; ++attempt) {
    if (attempt) {
      std::this_thread::sleep_for(std::chrono::milliseconds(delay));
      delay *= 2;
    }
    auto res = cli.Get(request);
    if (!res) {
      lastError = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return res->body;
    lastError = "HTTP " + std::to_string(res->status);
    if (res->status != 429 && res->status < 500) break;
  }
  throw LmfdbError(LmfdbError::Kind::Http, config_.baseUrl + request + ": " + lastError);
}

std::vector<RemoteField> LmfdbClient::fetchPage(int degree, long offset, int limit) {
  const std::string request = requestPath(degree, offset, limit);
  const std::string path = cachePath(request);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto stamp = std::filesystem::last_write_time(path);
    const auto sys = std::chrono::time_point_cast<std::chrono::system_clock::duration>(
        stamp - std::filesystem::file_time_type::clock::now() + std::chrono::system_clock::now());
    const std::time_t t = std::chrono::system_clock::to_time_t(sys);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return parseFieldsResponse(ss.str(), buf);
  }
  if (config_.offline) throw LmfdbError(LmfdbError::Kind::Offline, "not cached and offline: " + request);
  const std::string body = get(request);
  auto fields = parseFieldsResponse(body, isoNow());
  std::filesystem::create_directories(config_.cacheDir);
  std::ofstream out(path, std::ios::trunc);
  out << body;
  return fields;
}

}  // namespace septic
