#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cyclo/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

struct CacheDir {
  fs::path file;
  CacheDir() {
    std::random_device rd;
    file = fs::temp_directory_path() / ("cyclo-cli-" + std::to_string(rd()) + ".jsonl");
  }
  ~CacheDir() { fs::remove(file); }
};

Run run(std::vector<std::string> args, const fs::path& cache) {
  args.insert(args.begin(), {"--cache", cache.string()});
  std::ostringstream out, err;
  const int status = cyclo::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

/// Minimal RFC 4180 reader: returns rows of fields, or throws on malformed input.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  std::size_t i = 0;
  bool quoted = false;
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        i += 2;
        continue;
      }
      if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (!field.empty()) throw std::runtime_error("quote inside unquoted field");
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      if (i + 1 >= text.size() || text[i + 1] != '\n') throw std::runtime_error("bare CR");
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      ++i;
    } else if (c == '\n') {
      throw std::runtime_error("bare LF");
    } else {
      field += c;
    }
    ++i;
  }
  if (quoted) throw std::runtime_error("unterminated quote");
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("alpha prints the exact value first") {
    CacheDir c;
    const auto r = run({"alpha", "Z2^5 x Z4"}, c.file);
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "3/4");
    CHECK(r.out.find("\ncache       miss\n") != std::string::npos);
    const auto again = run({"alpha", "Z4 x Z2^5"}, c.file);
    CHECK(first_line(again.out) == "3/4");
    CHECK(again.out.find("hit") != std::string::npos);
  }

  TEST_CASE("census of Q16") {
    CacheDir c;
    const auto r = run({"--format", "json", "census", "Q16"}, c.file);
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["l1"] == "8");
    std::map<std::string, std::string> counts;
    for (const auto& row : doc["census"]) counts[row["order"]] = row["cyclic_subgroups"];
    CHECK(counts == std::map<std::string, std::string>{{"1", "1"}, {"2", "1"}, {"4", "5"}, {"8", "1"}});
  }

  TEST_CASE("structure report") {
    CacheDir c;
    const auto r = run({"--format", "json", "structure", "D8*Z4"}, c.file);
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["center_order"] == "4");
    CHECK(doc["commutator_order"] == "2");
    CHECK(doc["frattini_order"] == "2");
    CHECK(doc["in_c"] == "true");
  }

  TEST_CASE("verify campaigns") {
    CacheDir c;
    auto r = run({"--format", "json", "verify", "maximal-cyclic", "--cap", "4096"}, c.file);
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == "pass");
    std::set<std::string> members;
    for (const auto& m : doc["members"]) members.insert(m["descriptor"]);
    CHECK(members == std::set<std::string>{"D16", "Z2 x Z4"});

    r = run({"verify", "extraspecial", "--cap", "32"}, c.file);
    CHECK(r.status == 0);
    CHECK(r.out.find("\nstatus           pass\n") != std::string::npos);
  }

  TEST_CASE("scans") {
    CacheDir c;
    auto r = run({"--format", "json", "scan", "conjecture25", "--p", "2", "--n", "6"}, c.file);
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["collisions"] == "0");
    CHECK(doc["groups_examined"] == "11");

    r = run({"--format", "json", "scan", "spectrum", "--cap", "64", "--eps", "1/16"}, c.file);
    CHECK(r.status == 0);
    doc = nlohmann::json::parse(r.out);
    std::set<std::string> values;
    for (const auto& row : doc["spectrum"]) values.insert(row["alpha"]);
    for (const char* v : {"1", "3/4", "5/8", "1/2"}) CHECK(values.count(v) == 1);
    CHECK(doc["eps"] == "1/16");

    r = run({"scan", "injectivity", "--n", "41"}, c.file);
    CHECK(r.status == 2);
    CHECK(r.err.find("cap-exceeded") != std::string::npos);
  }

  TEST_CASE("csv output is RFC 4180") {
    CHECK(cyclo::cli::csv_field("plain") == "plain");
    CHECK(cyclo::cli::csv_field("a,b") == "\"a,b\"");
    CHECK(cyclo::cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CacheDir c;
    const auto r = run({"--format", "csv", "verify", "central-product"}, c.file);
    CHECK(r.status == 0);
    const auto rows = read_csv(r.out);
    REQUIRE(rows.size() > 2);
    for (const auto& row : rows) CHECK(row.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"table", "row", "column", "value"});
    bool nested_descriptor = false;
    for (const auto& row : rows) nested_descriptor = nested_descriptor || row[3] == "D8*(D8*Z4)";
    CHECK(nested_descriptor);
  }

  TEST_CASE("usage errors exit with 2") {
    CacheDir c;
    CHECK(run({}, c.file).status == 2);
    CHECK(run({"frobnicate"}, c.file).status == 2);
    CHECK(run({"verify", "no-such-campaign"}, c.file).status == 2);
    CHECK(run({"--format", "xml", "alpha", "Z4"}, c.file).status == 2);
    const auto bad = run({"alpha", "Q6"}, c.file);
    CHECK(bad.status == 2);
    CHECK(bad.err.find("malformed-parameter") != std::string::npos);
    CHECK(bad.err.find("offset 1") != std::string::npos);
    CHECK(run({"scan", "spectrum", "--eps", "x/y"}, c.file).status == 2);
    CHECK(run({"--help"}, c.file).status == 0);
  }

  TEST_CASE("cache revalidate") {
    CacheDir c;
    for (const char* g : {"Z4", "D8", "Q8", "D8*Z4"}) run({"alpha", g}, c.file);
    const auto r = run({"--format", "json", "cache", "revalidate"}, c.file);
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"] == "4");
    CHECK(doc["mismatches"] == "0");
  }

  TEST_CASE("cache disabled") {
    CacheDir c;
    std::ostringstream out, err;
    CHECK(cyclo::cli::run({"--no-cache", "alpha", "D16"}, out, err) == 0);
    CHECK(first_line(out.str()) == "3/4");
    CHECK_FALSE(fs::exists(c.file));
  }
}
