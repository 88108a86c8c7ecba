#pragma once

// Read-only client for degree-7 number fields from the LMFDB web API, with
// an on-disk response cache that lets everything downstream run offline.
//
// Environment: SEPTIC_LMFDB_URL (default https://www.lmfdb.org) and
// SEPTIC_LMFDB_CACHE (default .lmfdb-cache).

#include "septic/perm.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace septic {

/// "7T1".."7T7" in the standard transitive-group numbering.
std::optional<GaloisLabel> fromTransitiveLabel(std::string_view t);
std::string toTransitiveLabel(GaloisLabel g);

struct RemoteField {
  std::string label;
  IntPoly poly;
  BigInt discriminant;
  std::string galoisLabelRaw;
  std::string fetchedAt;
};

class LmfdbError : public std::runtime_error {
public:
  enum class Kind { Http, Parse, Offline };
  LmfdbError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct LmfdbConfig {
  std::string baseUrl;
  std::string cacheDir;
  /// Never touch the network; cache misses become Offline errors.
  bool offline = false;
  int maxRetries = 4;
  int initialBackoffMs = 500;
  /// Extra query parameters, recorded in the request (and so the cache key).
  std::map<std::string, std::string> filters;

  /// Defaults with environment overrides applied.
  static LmfdbConfig fromEnvironment();
};

/// Parses one API response body (JSON with a "data" array).
std::vector<RemoteField> parseFieldsResponse(const std::string& body, const std::string& fetchedAt);

class LmfdbClient {
public:
  explicit LmfdbClient(LmfdbConfig config);

  /// Fields of the given degree, `limit` records starting at `offset`.
  std::vector<RemoteField> fetchPage(int degree, long offset, int limit);

  /// Path and query string of the request fetchPage would issue.
  std::string requestPath(int degree, long offset, int limit) const;
  /// Cache file used for a request path.
  std::string cachePath(const std::string& request) const;

private:
  std::string get(const std::string& request);
  LmfdbConfig config_;
};

}  // namespace septic
