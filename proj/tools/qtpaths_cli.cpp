// qtpaths: enumeration, oracle expansions, identity suites and phi chains.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtpaths/bijections.hpp"
#include "qtpaths/cache.hpp"
#include "qtpaths/error.hpp"
#include "qtpaths/io.hpp"
#include "qtpaths/nabla.hpp"
#include "qtpaths/parking.hpp"
#include "qtpaths/path.hpp"
#include "qtpaths/verify.hpp"

using namespace qtpaths;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string kind = "dyck";
  int n = 3;
  int d = 0;
  int m = 1;
  int k = 0;
  std::string suite;
  bool all = false;
  std::string format = "pretty";
  std::string cache_dir;
  std::uint64_t limit = 0;  // 0: library default
  std::string word;
};

std::string join(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// A small row-oriented table that renders to every output format.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  Json json = Json::array();

  void print(const std::string& format, std::ostream& os) const {
    if (format == "json") {
      os << json.dump(2) << '\n';
    } else if (format == "csv") {
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
      }
    } else if (format == "latex") {
      os << "\\begin{tabular}{" << std::string(header.size(), 'l') << "}\n";
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? " & " : "") << header[i];
      os << " \\\\\n\\hline\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " & " : "") << "$" << r[i] << "$";
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
    } else {
      std::vector<std::size_t> w(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(int(w[i])) << r[i];
        os << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
    }
  }
};

std::uint64_t limit_or(const RunConfig& cfg, std::uint64_t fallback) { return cfg.limit ? cfg.limit : fallback; }

int cmd_enumerate(const RunConfig& cfg) {
  Table t;
  if (cfg.kind == "parking") {
    t.header = {"path", "labels", "area", "dinv", "read"};
    for (const auto& pf : enumerate_parking(cfg.n, cfg.m, limit_or(cfg, kDefaultParkingLimit))) {
      const int a = area(pf.path()), dv = dinv_total(pf);
      const auto rw = reading_word(pf);
      t.rows.push_back({pf.path().word(), join(pf.labels(), '-'), std::to_string(a), std::to_string(dv), join(rw, '-')});
      Json j = to_json(pf);
      j["area"] = a;
      j["dinv"] = dv;
      j["read"] = rw;
      t.json.push_back(std::move(j));
    }
  } else {
    PathKind kind;
    if (cfg.kind == "rect") kind = Rect{cfg.n, cfg.k};
    else if (cfg.kind == "dyck") kind = Dyck{cfg.n, cfg.m};
    else if (cfg.kind == "schroder") kind = Schroder{cfg.n, cfg.d, cfg.m};
    else throw CLI::ValidationError("--kind", "unknown kind " + cfg.kind);
    const bool with_bounce = cfg.kind != "rect" && cfg.m == 1;
    t.header = {"word", "area"};
    if (with_bounce) t.header.insert(t.header.end(), {"bounce", "numph"});
    for (const auto& p : enumerate_paths(kind, limit_or(cfg, kDefaultEnumerationLimit))) {
      std::vector<std::string> row{p.word(), std::to_string(area(p))};
      Json j{{"word", p.word()}, {"area", area(p)}};
      if (with_bounce) {
        const auto bd = bounce_data(p);
        row.push_back(std::to_string(bd.bounce));
        row.push_back(std::to_string(bd.numph));
        j["bounce"] = bd.bounce;
        j["numph"] = bd.numph;
      }
      t.rows.push_back(std::move(row));
      t.json.push_back(std::move(j));
    }
  }
  t.print(cfg.format, std::cout);
  return kExitOk;
}

int cmd_nabla(const RunConfig& cfg) {
  const std::uint64_t limit = limit_or(cfg, kDefaultNablaLimit);
  // Reject before touching the cache so oversized requests never hit disk.
  if (parking_count(cfg.n, cfg.m) > limit) nabla_qsym(cfg.n, cfg.m, limit);

  SchurXExpansion e;
  auto cache = ResultCache::open(cfg.cache_dir);
  const Json params{{"n", cfg.n}, {"m", cfg.m}};
  const std::string key = ResultCache::key("nabla", params);
  std::optional<Json> hit;
  if (cache) hit = cache->load(key);
  if (hit) {
    e = schurx_from_json(*hit);
    e.n = cfg.n;
  } else {
    e = nabla_oracle(cfg.n, cfg.m, limit);
    if (cache) cache->store(key, to_json(e));
  }

  if (cfg.format == "latex") {
    std::cout << latex_table(e, cfg.m);
    return kExitOk;
  }
  Table t;
  t.header = {"partition", "coefficient", "schur"};
  t.json = to_json(e);
  for (const auto& [lambda, p] : e.coeffs) {
    std::string schur = "-";
    try {
      schur = schur_decompose(p).to_string();
    } catch (const Error&) {
    }
    t.rows.push_back({"(" + partition_string(lambda) + ")", p.to_string(), schur});
  }
  t.print(cfg.format, std::cout);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.all) names = suite_names();
  else names.push_back(cfg.suite);
  std::vector<Report> reports;
  for (const auto& s : names) {
    auto r = run_suite(s, cfg.n, cfg.m);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  bool failed = false;
  Table t, disc;
  t.header = disc.header = {"status", "identity", "parameters", "checked", "failures"};
  for (const auto& r : reports) {
    failed |= r.status == Status::Fail;
    t.json.push_back(to_json(r));
    std::vector<std::string> row{to_string(r.status), r.identity, r.parameters.dump(), std::to_string(r.checked),
                                 std::to_string(r.failures)};
    (r.status == Status::Discrepancy ? disc : t).rows.push_back(std::move(row));
  }
  if (cfg.format == "pretty") {
    t.print(cfg.format, std::cout);
    if (!disc.rows.empty()) {
      std::cout << "\ndiscrepancies (reported, not asserted):\n";
      disc.print(cfg.format, std::cout);
    }
  } else {
    t.rows.insert(t.rows.end(), disc.rows.begin(), disc.rows.end());
    t.print(cfg.format, std::cout);
  }
  return failed ? kExitFail : kExitOk;
}

int cmd_chain(const RunConfig& cfg) {
  const Path g = Path::schroder(cfg.word, cfg.m);
  const PhiChain c = phi(g);
  if (cfg.format == "json") {
    std::cout << to_json(c).dump() << '\n';
    return kExitOk;
  }
  Table t;
  t.header = {"step", "word", "bounce", "area", "omega"};
  const std::size_t len = c.steps.size();
  for (std::size_t i = 0; i < len; ++i) {
    const auto& p = c.steps[i];
    // omega pairs step i with step len-1-i on {NE,D} starts
    t.rows.push_back({std::to_string(i), p.word(), std::to_string(bounce(p)), std::to_string(area(p)),
                      c.steps[len - 1 - i].word()});
  }
  t.print(cfg.format, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q,t-statistics on lattice paths, parking functions and tableaux"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv, latex or pretty")
        ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "result cache directory (default: $QTPATHS_CACHE)");
    sub->add_option("--limit", cfg.limit, "cap on enumerated objects");
  };

  auto* en = app.add_subcommand("enumerate", "list paths or parking functions with statistics");
  en->add_option("--kind", cfg.kind, "rect, dyck, schroder or parking")
      ->check(CLI::IsMember({"rect", "dyck", "schroder", "parking"}));
  en->add_option("--n", cfg.n)->check(CLI::Range(0, 64));
  en->add_option("--d", cfg.d)->check(CLI::NonNegativeNumber);
  en->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  en->add_option("--k", cfg.k)->check(CLI::NonNegativeNumber);
  add_common(en);

  auto* na = app.add_subcommand("nabla", "Schur expansion of nabla^m e_n from parking functions");
  na->add_option("--n", cfg.n)->check(CLI::Range(1, 64));
  na->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  add_common(na);

  auto* ve = app.add_subcommand("verify", "run identity suites");
  auto* suite = ve->add_option("--suite", cfg.suite)->check(CLI::IsMember(suite_names()));
  auto* all = ve->add_flag("--all", cfg.all, "every suite");
  suite->excludes(all);
  ve->add_option("--n", cfg.n)->check(CLI::Range(1, 16));
  ve->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  add_common(ve);

  auto* ch = app.add_subcommand("chain", "phi chain of a Schroder word");
  ch->add_option("word", cfg.word)->required();
  ch->add_option("--m", cfg.m)->check(CLI::PositiveNumber);
  add_common(ch);

  try {
    app.parse(argc, argv);
    if (ve->parsed() && !cfg.all && cfg.suite.empty()) throw CLI::RequiredError("--suite or --all");
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(cfg);
    if (na->parsed()) return cmd_nabla(cfg);
    if (ve->parsed()) return cmd_verify(cfg);
    return cmd_chain(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
