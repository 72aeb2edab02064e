#include "cyclo/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/cache.hpp"
#include "cyclo/census.hpp"
#include "cyclo/corpus.hpp"
#include "cyclo/descriptor.hpp"
#include "cyclo/error.hpp"
#include "cyclo/verify.hpp"

namespace cyclo::cli {

namespace {

using nlohmann::json;

// Command output before rendering: named scalar fields plus named tables.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::string headline;  // first line of table output, if any
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;

  void field(std::string k, std::string v) { fields.emplace_back(std::move(k), std::move(v)); }
  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
  }
};

enum class Format { table, csv, json };

std::string yes_no(bool b) { return b ? "true" : "false"; }

void render_table(const Output& o, std::ostream& out) {
  if (!o.headline.empty()) out << o.headline << '\n';
  std::size_t width = 0;
  for (const auto& [k, v] : o.fields) width = std::max(width, k.size());
  for (const auto& [k, v] : o.fields) {
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
  for (const auto& t : o.tables) {
    out << '\n' << t.name << '\n';
    if (t.rows.empty()) {
      out << "  (none)\n";
      continue;
    }
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      w[c] = t.columns[c].size();
      for (const auto& r : t.rows) w[c] = std::max(w[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      out << ' ';
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << ' ' << std::left << std::setw(static_cast<int>(w[c])) << cells[c];
      }
      out << '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
  }
}

// Long format so that any output fits one rectangular table.
void render_csv(const Output& o, std::ostream& out) {
  auto row = [&](const std::string& table, std::size_t i, const std::string& col,
                 const std::string& value) {
    out << csv_field(table) << ',' << i << ',' << csv_field(col) << ',' << csv_field(value)
        << "\r\n";
  };
  out << "table,row,column,value\r\n";
  for (const auto& [k, v] : o.fields) row("summary", 0, k, v);
  for (const auto& t : o.tables) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t c = 0; c < t.columns.size(); ++c) row(t.name, i, t.columns[c], t.rows[i][c]);
    }
  }
}

void render_json(const Output& o, std::ostream& out) {
  json doc = json::object();
  for (const auto& [k, v] : o.fields) doc[k] = v;
  for (const auto& t : o.tables) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = r[c];
      rows.push_back(std::move(obj));
    }
    doc[t.name] = std::move(rows);
  }
  out << doc.dump(2) << '\n';
}

void render(const Output& o, Format f, std::ostream& out) {
  switch (f) {
    case Format::table: render_table(o, out); break;
    case Format::csv: render_csv(o, out); break;
    case Format::json: render_json(o, out); break;
  }
}

// -- commands ----------------------------------------------------------------------

struct Settings {
  Format format = Format::table;
  std::string cache_path;
  bool no_cache = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

Cache open_cache(const Settings& s, std::ostream& err) {
  std::filesystem::path path;
  if (!s.no_cache) path = s.cache_path.empty() ? default_cache_path() : std::filesystem::path(s.cache_path);
  return Cache(path, [&err](const std::string& msg) { err << "warning: " << msg << '\n'; });
}

void add_census_table(Output& o, const CacheRecord& r) {
  auto& t = o.table("census", {"order", "cyclic_subgroups", "elements"});
  for (const auto& [d, n] : r.census) {
    auto it = r.order_profile.find(d);
    t.rows.push_back({std::to_string(d), std::to_string(n),
                      std::to_string(it == r.order_profile.end() ? 0 : it->second)});
  }
}

void add_record_fields(Output& o, const CacheRecord& r, bool hit) {
  o.field("descriptor", r.descriptor);
  o.field("order", std::to_string(r.order));
  o.field("l1", std::to_string(r.l1));
  o.field("alpha", r.alpha.str());
  o.field("nilpotent", yes_no(r.nilpotent));
  o.field("in_c", yes_no(r.in_c));
  o.field("cache", hit ? "hit" : "miss");
}

Output cmd_alpha(const std::string& desc, const Settings& s, std::ostream& err) {
  Cache cache = open_cache(s, err);
  bool hit = false;
  const CacheRecord r = cache.lookup(desc, &hit);
  Output o;
  o.headline = r.alpha.str();
  add_record_fields(o, r, hit);
  add_census_table(o, r);
  return o;
}

Output cmd_census(const std::string& desc, const Settings& s, std::ostream& err) {
  Cache cache = open_cache(s, err);
  bool hit = false;
  const CacheRecord r = cache.lookup(desc, &hit);
  Output o;
  add_record_fields(o, r, hit);
  add_census_table(o, r);
  return o;
}

std::string invariants_string(const Group& g) {
  std::string out;
  for (const auto& [p, shape] : abelian_invariants(g)) {
    if (!out.empty()) out += "; ";
    out += shape.str();
  }
  return out.empty() ? "trivial" : out;
}

Output cmd_structure(const std::string& desc) {
  const auto d = canonicalize(parse_descriptor(desc));
  const Group g = build_from_descriptor(d);
  const auto profile = order_profile(g);
  const auto census = cyclic_census(g);
  const ElementSet z = center(g);
  const ElementSet derived = commutator_subgroup(g);
  const bool nilpotent = is_nilpotent(g);
  Output o;
  o.field("descriptor", to_string(d));
  o.field("order", std::to_string(g.order()));
  o.field("kind", std::string(kind_name(g.kind())));
  o.field("abelian", yes_no(g.is_abelian()));
  o.field("exponent", std::to_string(profile.exponent));
  o.field("involutions", std::to_string(profile.involutions));
  o.field("center_order", std::to_string(z.size()));
  o.field("commutator_order", std::to_string(derived.size()));
  const auto primes = prime_divisors(g.order());
  if (primes.size() == 1) {
    const ElementSet phi = frattini_pgroup(g, primes.front());
    o.field("frattini_order", std::to_string(phi.size()));
    o.field("commutator_equals_frattini", yes_no(phi == derived));
  }
  if (g.is_abelian()) o.field("invariants", invariants_string(g));
  o.field("abelianization_invariants", invariants_string(quotient(g, derived.elements())));
  o.field("nilpotent", yes_no(nilpotent));
  o.field("alpha", census.alpha.str());
  o.field("in_c", yes_no(nilpotent && census.alpha == kThreeQuarters));
  return o;
}

void add_report(Output& o, const verify::CampaignReport& r) {
  o.field("campaign", r.id);
  o.field("status", r.passed() ? "pass" : "fail");
  for (const auto& [k, v] : r.parameters) o.field(k, v);
  o.field("groups_examined", std::to_string(r.groups_examined));
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << r.wall_seconds;
  o.field("wall_seconds", secs.str());
  auto& a = o.table("assertions", {"assertion", "checks", "failures"});
  for (const auto& t : r.assertions) {
    a.rows.push_back({t.name, std::to_string(t.checks), std::to_string(t.failures)});
  }
  auto& c = o.table("counterexamples", {"descriptor", "assertion", "detail"});
  for (const auto& x : r.counterexamples) c.rows.push_back({x.descriptor, x.assertion, x.detail});
  auto& m = o.table("members", {"descriptor"});
  for (const auto& x : r.members) m.rows.push_back({x});
  auto& n = o.table("notes", {"note"});
  for (const auto& x : r.notes) n.rows.push_back({x});
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {
      "abelian",          "extraspecial",         "almost-extraspecial",
      "dicyclic",         "gen-dihedral",         "maximal-cyclic",
      "central-product",  "involution-criterion", "commutator-structure",
      "alpha-properties", "all"};
  return names;
}

/// Members of the class found by the family and corpus campaigns at their
/// default caps.
std::vector<std::string> discovered_members(unsigned jobs) {
  std::vector<verify::CampaignReport> reports;
  reports.push_back(verify::verify_family(verify::Family::extraspecial, 128, jobs));
  reports.push_back(verify::verify_family(verify::Family::almost_extraspecial, 256, jobs));
  reports.push_back(verify::verify_family(verify::Family::dicyclic, 128, jobs));
  reports.push_back(verify::verify_family(verify::Family::gen_dihedral, 256, jobs));
  reports.push_back(verify::verify_family(verify::Family::maximal_cyclic, 4096, jobs));
  reports.push_back(verify::verify_involution_criterion(256, jobs));
  std::vector<std::string> members;
  for (const auto& r : reports) {
    for (const auto& m : r.members) {
      const auto key = canonical_string(m);
      if (std::find(members.begin(), members.end(), key) == members.end()) members.push_back(key);
    }
  }
  return members;
}

verify::CampaignReport run_named_campaign(const std::string& name, std::optional<std::uint64_t> cap,
                                          unsigned jobs) {
  using verify::Family;
  auto family = [&](Family f, std::uint64_t default_cap) {
    return verify::verify_family(f, cap.value_or(default_cap), jobs);
  };
  if (name == "abelian") {
    unsigned e = 0;
    while ((std::uint64_t{1} << (e + 1)) <= cap.value_or(1024)) ++e;
    return verify::verify_abelian_classification(e, 10, jobs);
  }
  if (name == "extraspecial") return family(Family::extraspecial, 128);
  if (name == "almost-extraspecial") return family(Family::almost_extraspecial, 256);
  if (name == "dicyclic") return family(Family::dicyclic, 128);
  if (name == "gen-dihedral") return family(Family::gen_dihedral, 256);
  if (name == "maximal-cyclic") return family(Family::maximal_cyclic, 4096);
  if (name == "central-product") return verify::verify_central_product_counts(jobs);
  if (name == "involution-criterion") {
    return verify::verify_involution_criterion(cap.value_or(256), jobs);
  }
  if (name == "commutator-structure") {
    return verify::verify_commutator_structure(discovered_members(jobs), jobs);
  }
  if (name == "alpha-properties") return verify::verify_alpha_properties(cap.value_or(256), jobs);
  if (name == "all") {
    verify::CampaignReport all;
    all.id = "all";
    for (const auto& n : campaign_names()) {
      if (n == "all") continue;
      auto r = run_named_campaign(n, std::nullopt, jobs);
      all.wall_seconds += r.wall_seconds;
      all.notes.push_back(n + ": " + (r.passed() ? "pass" : "fail"));
      all.merge(std::move(r));
    }
    return all;
  }
  throw Error(Errc::invalid_parameter, "unknown campaign " + name);
}

Output cmd_spectrum(std::uint64_t cap, const AlphaValue& eps, unsigned jobs) {
  const auto records = verify::alpha_spectrum({cap, cap}, jobs);
  const auto summary = verify::summarize_spectrum(records, eps);
  Output o;
  o.field("groups", std::to_string(summary.records.size()));
  o.field("cap", std::to_string(cap));
  o.field("distinct_alpha", std::to_string(summary.distinct.size()));
  o.field("eps", summary.eps.str());
  o.field("near_three_quarters", std::to_string(summary.near_three_quarters));
  auto& t = o.table("spectrum", {"alpha", "groups", "near_three_quarters"});
  for (const auto& [a, n] : summary.distinct) {
    t.rows.push_back({a.str(), std::to_string(n), yes_no(abs_diff(a, kThreeQuarters) <= eps)});
  }
  auto& g = o.table("groups", {"descriptor", "order", "alpha", "in_c"});
  for (const auto& r : summary.records) {
    g.rows.push_back({r.descriptor, std::to_string(r.order), r.alpha.str(), yes_no(r.in_c)});
  }
  return o;
}

// Parse errors already carry their code, offset and expected tokens.
std::string describe(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return e.what();
  return std::string(errc_name(e.code())) + ": " + e.what();
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cyclic-subgroup census and alpha = |L1(G)|/|G| for finite 2-groups", "cyclo"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache", s.cache_path, "Cache file (default: $CYCLO_CACHE or the user cache dir)");
  app.add_flag("--no-cache", s.no_cache, "Do not read or write the cache");
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
  std::uint64_t order_limit = order_cap();
  app.add_option("--order-cap", order_limit, "Largest group order that may be constructed");

  std::string descriptor;
  auto* alpha = app.add_subcommand("alpha", "Print alpha(G) and the cyclic census");
  alpha->add_option("descriptor", descriptor, "Group expression, e.g. \"Z2^5 x Z4\"")->required();
  auto* census = app.add_subcommand("census", "Print the cyclic-subgroup count per order");
  census->add_option("descriptor", descriptor)->required();
  auto* structure = app.add_subcommand("structure", "Center, commutator, Frattini, class membership");
  structure->add_option("descriptor", descriptor)->required();

  std::string campaign;
  std::optional<std::uint64_t> cap;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd->add_option("campaign", campaign)->required()->check(CLI::IsMember(campaign_names()));
  verify_cmd->add_option("--cap", cap, "Largest group order examined");

  std::string scan_kind;
  std::uint64_t p = 2;
  unsigned n = 20;
  std::string eps_text = "1/100";
  std::uint64_t scan_cap = 256;
  auto* scan = app.add_subcommand("scan", "Exploratory scans");
  scan->add_option("kind", scan_kind)
      ->required()
      ->check(CLI::IsMember({"spectrum", "injectivity", "conjecture25"}));
  scan->add_option("--p", p, "Prime for the injectivity scan");
  scan->add_option("--n", n, "Order exponent for the injectivity scan");
  scan->add_option("--eps", eps_text, "Window around 3/4 as an exact rational p/q");
  scan->add_option("--cap", scan_cap, "Largest group order in the spectrum");

  std::string cache_action;
  double fraction = 0.05;
  auto* cache_cmd = app.add_subcommand("cache", "Cache maintenance");
  cache_cmd->add_option("action", cache_action)->required()->check(CLI::IsMember({"revalidate"}));
  cache_cmd->add_option("--fraction", fraction, "Share of records recomputed")
      ->check(CLI::Range(0.0, 1.0));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  s.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;
  const std::uint64_t saved_cap = order_cap();
  set_order_cap(order_limit);
  struct RestoreCap {
    std::uint64_t v;
    ~RestoreCap() { set_order_cap(v); }
  } restore{saved_cap};

  try {
    Output o;
    int status = kExitOk;
    if (*alpha) {
      o = cmd_alpha(descriptor, s, err);
    } else if (*census) {
      o = cmd_census(descriptor, s, err);
    } else if (*structure) {
      o = cmd_structure(descriptor);
    } else if (*verify_cmd) {
      const auto report = run_named_campaign(campaign, cap, s.jobs);
      add_report(o, report);
      status = report.passed() ? kExitOk : kExitFailed;
    } else if (*scan) {
      if (scan_kind == "spectrum") {
        o = cmd_spectrum(scan_cap, AlphaValue::parse(eps_text), s.jobs);
      } else {
        const auto report = verify::scan_alpha_injectivity(p, n);
        add_report(o, report);
        o.field("collisions", std::to_string(report.counterexamples.size()));
      }
    } else if (*cache_cmd) {
      Cache cache = open_cache(s, err);
      const auto r = revalidate(cache, fraction, 1, s.jobs);
      o.field("cache", cache.path().string());
      o.field("records", std::to_string(r.total));
      o.field("sampled", std::to_string(r.sampled));
      o.field("mismatches", std::to_string(r.mismatches.size()));
      auto& t = o.table("mismatched", {"descriptor"});
      for (const auto& m : r.mismatches) t.rows.push_back({m});
      status = r.mismatches.empty() ? kExitOk : kExitFailed;
    }
    render(o, s.format, out);
    return status;
  } catch (const Error& e) {
    err << "error: " << describe(e) << '\n';
    return e.code() == Errc::internal_inconsistency ? kExitFailed : kExitUsage;
  }
}

}  // namespace cyclo::cli
