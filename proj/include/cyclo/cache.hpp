#pragma once

// Append-only, line-delimited JSON cache of per-group census results keyed by
// canonical descriptor.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclo/alpha.hpp"
#include "cyclo/census.hpp"

namespace cyclo {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheRecord {
  std::string descriptor;  // canonical form
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> order_profile;
  std::map<std::uint64_t, std::uint64_t> census;
  std::uint64_t l1 = 0;
  AlphaValue alpha;
  bool nilpotent = false;
  bool in_c = false;
  int schema_version = kCacheSchemaVersion;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

std::string to_json_line(const CacheRecord& r);
/// Throws cyclo::Error(syntax_error) on malformed input.
CacheRecord record_from_json_line(const std::string& line);

/// Recomputes the record for a descriptor from scratch.
CacheRecord compute_record(const std::string& descriptor);

using Warn = std::function<void(const std::string&)>;

class Cache {
 public:
  /// An empty path gives a memory-only cache. Problems reading the file are
  /// reported through `warn` and never thrown.
  explicit Cache(std::filesystem::path path, Warn warn = {});

  std::optional<CacheRecord> get(const std::string& canonical_descriptor) const;
  void put(const CacheRecord& record);

  /// Cached record or a freshly computed (and stored) one.
  CacheRecord lookup(const std::string& descriptor, bool* hit = nullptr);

  std::vector<std::string> keys() const;
  std::size_t size() const;
  std::size_t skipped_lines() const noexcept { return skipped_; }
  const std::filesystem::path& path() const noexcept { return path_; }
  bool persistent() const noexcept { return writable_; }

 private:
  std::filesystem::path path_;
  Warn warn_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, CacheRecord> records_;
  std::size_t skipped_ = 0;
  bool writable_ = false;
};

struct RevalidationResult {
  std::size_t total = 0;
  std::size_t sampled = 0;
  std::vector<std::string> mismatches;
};

/// Recomputes ceil(fraction * size) records chosen with a seeded shuffle.
RevalidationResult revalidate(const Cache& cache, double fraction = 0.05,
                              std::uint64_t seed = 1, unsigned jobs = 1);

/// CYCLO_CACHE if set, else $XDG_CACHE_HOME/cyclo/records.jsonl, else
/// ~/.cache/cyclo/records.jsonl.
std::filesystem::path default_cache_path();

}  // namespace cyclo
