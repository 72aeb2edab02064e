#include "cyclo/cache.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

#include <json.hpp>

#include "cyclo/descriptor.hpp"
#include "cyclo/error.hpp"
#include "cyclo/parallel.hpp"

namespace cyclo {

namespace {

using nlohmann::json;

json counts_to_json(const std::map<std::uint64_t, std::uint64_t>& m) {
  json out = json::object();
  for (const auto& [d, c] : m) out[std::to_string(d)] = c;
  return out;
}

std::map<std::uint64_t, std::uint64_t> counts_from_json(const json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) out[std::stoull(k)] = v.get<std::uint64_t>();
  return out;
}

}  // namespace

std::string to_json_line(const CacheRecord& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["descriptor"] = r.descriptor;
  j["order"] = r.order;
  j["order_profile"] = counts_to_json(r.order_profile);
  j["census"] = counts_to_json(r.census);
  j["l1"] = r.l1;
  j["alpha_num"] = r.alpha.numerator().str();
  j["alpha_den"] = r.alpha.denominator().str();
  j["nilpotent"] = r.nilpotent;
  j["in_c"] = r.in_c;
  return j.dump();
}

CacheRecord record_from_json_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    CacheRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    r.descriptor = j.at("descriptor").get<std::string>();
    r.order = j.at("order").get<std::uint64_t>();
    r.order_profile = counts_from_json(j.at("order_profile"));
    r.census = counts_from_json(j.at("census"));
    r.l1 = j.at("l1").get<std::uint64_t>();
    r.alpha = AlphaValue(BigInt(j.at("alpha_num").get<std::string>()),
                         BigInt(j.at("alpha_den").get<std::string>()));
    r.nilpotent = j.at("nilpotent").get<bool>();
    r.in_c = j.at("in_c").get<bool>();
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::syntax_error, std::string("bad cache record: ") + e.what());
  }
}

CacheRecord compute_record(const std::string& descriptor) {
  const auto d = canonicalize(parse_descriptor(descriptor));
  const Group g = build_from_descriptor(d);
  const auto profile = order_profile(g);
  const auto census = cyclic_census(g);
  CacheRecord r;
  r.descriptor = to_string(d);
  r.order = g.order();
  r.order_profile = profile.counts;
  r.census = census.counts;
  r.l1 = census.l1;
  r.alpha = census.alpha;
  r.nilpotent = is_nilpotent(g);
  r.in_c = r.nilpotent && r.alpha == kThreeQuarters;
  return r;
}

Cache::Cache(std::filesystem::path path, Warn warn) : path_(std::move(path)), warn_(std::move(warn)) {
  if (!warn_) warn_ = [](const std::string&) {};
  if (path_.empty()) return;
  std::error_code ec;
  if (std::filesystem::exists(path_, ec)) {
    std::ifstream in(path_);
    if (!in) {
      warn_("cannot read cache " + path_.string() + "; continuing without cache");
      path_.clear();
      return;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        CacheRecord r = record_from_json_line(line);
        if (r.schema_version != kCacheSchemaVersion) continue;
        records_.insert_or_assign(r.descriptor, std::move(r));
      } catch (const Error&) {
        ++skipped_;
        warn_("skipping corrupted cache line " + std::to_string(lineno) + " in " +
              path_.string());
      }
    }
  } else if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  std::ofstream probe(path_, std::ios::app);
  writable_ = static_cast<bool>(probe);
  // A truncated final line must not swallow the next appended record.
  if (writable_ && std::filesystem::file_size(path_, ec) > 0) {
    std::ifstream tail(path_, std::ios::binary);
    tail.seekg(-1, std::ios::end);
    if (tail.get() != '\n') probe << '\n';
  }
  if (!writable_) {
    warn_("cannot write cache " + path_.string() + "; results will not be persisted");
  }
}

std::optional<CacheRecord> Cache::get(const std::string& canonical_descriptor) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(canonical_descriptor);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const CacheRecord& record) {
  std::lock_guard lock(mutex_);
  records_.insert_or_assign(record.descriptor, record);
  if (!writable_) return;
  std::ofstream out(path_, std::ios::app);
  out << to_json_line(record) << '\n';
  if (!out) {
    writable_ = false;
    warn_("write to cache " + path_.string() + " failed; results will not be persisted");
  }
}

CacheRecord Cache::lookup(const std::string& descriptor, bool* hit) {
  const std::string key = canonical_string(descriptor);
  if (auto r = get(key)) {
    if (hit) *hit = true;
    return *r;
  }
  if (hit) *hit = false;
  CacheRecord r = compute_record(key);
  put(r);
  return r;
}

std::vector<std::string> Cache::keys() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& [k, v] : records_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Cache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

RevalidationResult revalidate(const Cache& cache, double fraction, std::uint64_t seed,
                              unsigned jobs) {
  RevalidationResult result;
  auto keys = cache.keys();
  result.total = keys.size();
  if (keys.empty()) return result;
  std::mt19937_64 rng(seed);
  std::shuffle(keys.begin(), keys.end(), rng);
  const auto n = std::min<std::size_t>(
      keys.size(), static_cast<std::size_t>(std::ceil(fraction * double(keys.size()))));
  keys.resize(std::max<std::size_t>(n, 1));
  result.sampled = keys.size();
  auto same = parallel_map(keys.size(), jobs, [&](std::size_t i) -> char {
    try {
      return *cache.get(keys[i]) == compute_record(keys[i]);
    } catch (const std::exception&) {
      return 0;
    }
  });
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!same[i]) result.mismatches.push_back(keys[i]);
  }
  std::sort(result.mismatches.begin(), result.mismatches.end());
  return result;
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("CYCLO_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "cyclo" / "records.jsonl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "cyclo" / "records.jsonl";
  }
  return {};
}

}  // namespace cyclo
