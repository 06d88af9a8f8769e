// ncht: enumeration, tables, bijections and verification runners for
// noncrossing hypertrees.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncht/ncht.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kCapExceeded = 3 };

struct RunConfig {
  int n = 4;
  int max_n = 0;
  std::string format = "json";
  bool force = false;
  std::string input = "-";
  std::string check = "all";
  std::string kind = "hypertrees";
  int edges = 0;
};

struct Capped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_cap(const RunConfig& cfg, int n, int cap, const std::string& what) {
  if (n > cap && !cfg.force)
    throw Capped(what + " is capped at n <= " + std::to_string(cap) + " (use --force to override)");
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ncht::InvalidArgument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ncht::InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

std::string join_edges(const ncht::Hyperforest& h) {
  std::string s;
  for (const auto& e : h.edges()) s += e.to_string();
  return s;
}

int cmd_enumerate(const RunConfig& cfg) {
  require_cap(cfg, cfg.n, 8, "enumeration");
  const int size = cfg.n + 1;
  std::vector<ncht::Hyperforest> items;
  if (cfg.kind == "basic") items = ncht::enumerate_basic(size);
  else if (cfg.kind == "trees") items = ncht::enumerate_nctrees(size);
  else if (cfg.kind == "hyperforests") {
    require_cap(cfg, cfg.n, 5, "hyperforest enumeration");
    items = ncht::enumerate_nchyperforests(size);
  } else if (cfg.kind == "hypertrees")
    items = ncht::enumerate_nchypertrees(size, cfg.edges > 0 ? std::optional<int>(cfg.edges) : std::nullopt);
  else
    throw ncht::InvalidArgument("unknown kind " + cfg.kind);
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& h : items) out.push_back(ncht::io::to_json(h));
    std::cout << out.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "index,edge_count,edges\n";
    for (std::size_t i = 0; i < items.size(); ++i)
      std::cout << i << ',' << items[i].edge_count() << ",\"" << join_edges(items[i]) << "\"\n";
  } else {
    for (const auto& h : items) std::cout << join_edges(h) << '\n';
    std::cout << items.size() << " items\n";
  }
  return kOk;
}

int cmd_count(const RunConfig& cfg) {
  require_cap(cfg, cfg.n, 8, "counting");
  auto counts = ncht::count_by_edges(cfg.n + 1);
  std::vector<ncht::io::CensusRow> rows;
  for (int k = 1; k < static_cast<int>(counts.size()); ++k) rows.push_back({cfg.n, k - 2, counts[k]});
  if (cfg.format == "json") std::cout << ncht::io::census_json(rows).dump() << '\n';
  else if (cfg.format == "csv") std::cout << ncht::io::census_csv(rows);
  else
    for (const auto& r : rows) std::cout << "n=" << r.n << "  dim " << std::setw(2) << r.dimension << "  " << r.count << '\n';
  return kOk;
}

std::pair<int, int> range_of(const RunConfig& cfg, int lo, int default_hi) {
  if (cfg.max_n > 0) return {lo, cfg.max_n};
  return {lo, default_hi};
}

int cmd_table1(const RunConfig& cfg, bool single) {
  auto [lo, hi] = single ? std::pair{cfg.n, cfg.n} : range_of(cfg, 2, 8);
  require_cap(cfg, hi, 8, "table1");
  std::vector<ncht::FVector> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back(ncht::f_vector(n + 1));
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"n", r.n_plus_1 - 1}, {"f", r.f}, {"reduced_euler", r.reduced_euler}});
    std::cout << out.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::vector<ncht::io::CensusRow> census;
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.f.size(); ++i) census.push_back({r.n_plus_1 - 1, static_cast<int>(i) - 1, r.f[i]});
    std::cout << ncht::io::census_csv(census);
  } else {
    std::cout << " n |  f_-1      f_0      f_1      f_2      f_3      f_4      f_5      f_6 |  chi\n";
    for (const auto& r : rows) {
      std::cout << std::setw(2) << r.n_plus_1 - 1 << " |";
      for (std::size_t i = 0; i < 8; ++i) {
        if (i < r.f.size()) std::cout << std::setw(i ? 9 : 6) << r.f[i];
        else std::cout << std::setw(i ? 9 : 6) << "";
      }
      std::cout << " | " << std::setw(5) << r.reduced_euler << '\n';
    }
  }
  return kOk;
}

struct Table2Row {
  int n;
  std::uint64_t ncht_vertices, ncht_chambers, ncpl_vertices, ncpl_chambers;
  bool enumerated;
};

int cmd_table2(const RunConfig& cfg, bool single) {
  auto [lo, hi] = single ? std::pair{cfg.n, cfg.n} : range_of(cfg, 3, 9);
  std::vector<Table2Row> rows;
  for (int n = lo; n <= hi; ++n) {
    const int size = n + 1;
    if (n <= 8 || cfg.force) {
      ncht::NCPartitionLattice lattice(size);
      rows.push_back({n, static_cast<std::uint64_t>(size) * (size - 2), ncht::count_by_edges(size).back(),
                      static_cast<std::uint64_t>(lattice.size()) - 2, lattice.count_maximal_chains(), true});
    } else {
      rows.push_back({n, static_cast<std::uint64_t>(size) * (size - 2), ncht::fuss_catalan(n), ncht::catalan(size) - 2,
                      ncht::verify::power(size, n - 1), false});
    }
  }
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n}, {"d", r.n - 2}, {"ncht_vertices", r.ncht_vertices}, {"ncht_chambers", r.ncht_chambers},
                     {"ncpl_vertices", r.ncpl_vertices}, {"ncpl_chambers", r.ncpl_chambers}, {"enumerated", r.enumerated}});
    std::cout << out.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "n,d,ncht_vertices,ncht_chambers,ncpl_vertices,ncpl_chambers,enumerated\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << r.n - 2 << ',' << r.ncht_vertices << ',' << r.ncht_chambers << ',' << r.ncpl_vertices
                << ',' << r.ncpl_chambers << ',' << (r.enumerated ? "true" : "false") << '\n';
  } else {
    std::cout << " n  d |   |V|   chambers ||    |V|    chambers\n";
    for (const auto& r : rows)
      std::cout << std::setw(2) << r.n << std::setw(3) << r.n - 2 << " |" << std::setw(6) << r.ncht_vertices
                << std::setw(11) << r.ncht_chambers << " ||" << std::setw(7) << r.ncpl_vertices << std::setw(12)
                << r.ncpl_chambers << (r.enumerated ? "" : "  (formula)") << '\n';
  }
  return kOk;
}

int cmd_dissect(const RunConfig& cfg) {
  json in = read_input(cfg.input);
  json out;
  if (in.contains("k")) {
    auto d = ncht::io::dissection_from_json(in);
    out = ncht::io::to_json(ncht::dissection_to_hypertree(d));
  } else {
    auto h = ncht::io::hyperforest_from_json(in);
    out = ncht::io::to_json(ncht::hypertree_to_dissection(h));
  }
  if (cfg.format == "ascii") {
    if (out.contains("diagonals")) {
      std::cout << out["diagonals"].size() << " diagonals of the " << 2 * out["k"].get<int>() << "-gon\n";
      for (const auto& d : out["diagonals"]) std::cout << "  " << d[0] << " -- midpoint(" << d[1] << ")\n";
    } else {
      std::cout << join_edges(ncht::io::hyperforest_from_json(out)) << '\n';
    }
  } else {
    std::cout << out.dump() << '\n';
  }
  return kOk;
}

int cmd_standardize(const RunConfig& cfg) {
  auto o = ncht::io::ordered_from_json(read_input(cfg.input));
  auto s = ncht::standardize(o);
  if (cfg.format == "ascii") {
    std::cout << ncht::factorization_string(ncht::factors(o)) << " -> " << ncht::factorization_string(ncht::factors(s))
              << '\n';
  } else {
    json out = ncht::io::to_json(s);
    out["factorization"] = ncht::io::factorization_to_json(ncht::factors(s));
    out["proper"] = ncht::is_proper(s);
    std::cout << out.dump() << '\n';
  }
  return kOk;
}

int cmd_sphere(const RunConfig& cfg) {
  auto t = ncht::io::hyperforest_from_json(read_input(cfg.input));
  require_cap(cfg, t.n_plus_1() - 1, 8, "sphere");
  json report = ncht::io::sphere_report(t);
  if (cfg.format == "ascii") {
    std::cout << "label " << join_edges(t) << "\nchambers " << report["chamber_count"] << "\ntree chambers "
              << report["tree_chamber_count"] << "\nclassification " << report["classification"].get<std::string>()
              << '\n';
  } else {
    std::cout << report.dump() << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  static const std::vector<std::string> checks{"table1",     "table2",      "bijection",    "duality",
                                               "cross-polytope", "caterpillar", "amalgamation", "properties"};
  std::vector<std::string> selected;
  if (cfg.check == "all") selected = checks;
  else if (std::find(checks.begin(), checks.end(), cfg.check) != checks.end()) selected = {cfg.check};
  else throw ncht::InvalidArgument("unknown check " + cfg.check);

  const int n = cfg.n;
  if (n < 2) throw ncht::InvalidArgument("n must be at least 2");
  std::vector<ncht::verify::Report> reports;
  for (const auto& c : selected) {
    if (c == "table1") {
      require_cap(cfg, n, 8, c);
      reports.push_back(ncht::verify::table1(n));
    } else if (c == "table2") {
      require_cap(cfg, n, 8, c);
      reports.push_back(ncht::verify::table2(n));
    } else if (c == "bijection") {
      require_cap(cfg, n, 5, c);
      reports.push_back(ncht::verify::bijection(n));
    } else if (c == "duality") {
      require_cap(cfg, n, 5, c);
      reports.push_back(ncht::verify::duality(n));
    } else if (c == "cross-polytope") {
      require_cap(cfg, n, 6, c);
      reports.push_back(ncht::verify::cross_polytope(n));
    } else if (c == "caterpillar") {
      require_cap(cfg, n, 8, c);
      reports.push_back(ncht::verify::caterpillar(n, n <= 5));
    } else if (c == "amalgamation") {
      require_cap(cfg, n, 5, c);
      reports.push_back(ncht::verify::amalgamation(n));
    } else if (c == "properties") {
      require_cap(cfg, n, 6, c);
      reports.push_back(ncht::verify::properties(n));
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == "ascii") {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << " n=" << r.n << " (" << r.checked << " checks)\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
  } else if (cfg.format == "csv") {
    std::cout << "check,n,passed,checked,failures\n";
    for (const auto& r : reports)
      std::cout << r.id << ',' << r.n << ',' << (r.passed() ? "true" : "false") << ',' << r.checked << ','
                << r.failures.size() << '\n';
  } else {
    json out = json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    std::cout << out.dump() << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncrossing hypertrees: enumeration, tables and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "ascii"}));
    sub->add_flag("--force", cfg.force, "Run beyond the default size caps");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Polygon has n+1 vertices")->check(CLI::Range(1, 15));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List noncrossing hypertrees, trees, basic hypertrees or hyperforests");
  add_n(enumerate);
  add_common(enumerate);
  enumerate->add_option("--kind", cfg.kind)->check(CLI::IsMember({"hypertrees", "trees", "basic", "hyperforests"}));
  enumerate->add_option("--edges", cfg.edges, "Only hypertrees with this many hyperedges");

  auto* count = app.add_subcommand("count", "Count noncrossing hypertrees by dimension");
  add_n(count);
  add_common(count);

  std::optional<int> table_n;
  auto* table1 = app.add_subcommand("table1", "f-vector and reduced Euler characteristic rows");
  table1->add_option("--n", table_n, "Single row");
  table1->add_option("--max-n", cfg.max_n, "Last row of the range");
  add_common(table1);

  auto* table2 = app.add_subcommand("table2", "Vertex and chamber counts of both complexes");
  table2->add_option("--n", table_n, "Single row");
  table2->add_option("--max-n", cfg.max_n, "Last row of the range");
  add_common(table2);

  auto* dissect = app.add_subcommand("dissect", "Hypertree JSON to dissection JSON, or back when the input has \"k\"");
  dissect->add_option("input", cfg.input, "JSON file, or - for stdin");
  add_common(dissect);

  auto* standardize = app.add_subcommand("standardize", "Properly ordered hypertree naming the same chain");
  standardize->add_option("input", cfg.input, "JSON file, or - for stdin");
  add_common(standardize);

  auto* sphere = app.add_subcommand("sphere", "Sphere report for a noncrossing hypertree");
  sphere->add_option("input", cfg.input, "JSON file, or - for stdin");
  add_common(sphere);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("check", cfg.check, "table1|table2|bijection|duality|cross-polytope|caterpillar|amalgamation|properties|all");
  add_n(verify);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (table_n) cfg.n = *table_n;
    if (*enumerate) return cmd_enumerate(cfg);
    if (*count) return cmd_count(cfg);
    if (*table1) return cmd_table1(cfg, table_n.has_value());
    if (*table2) return cmd_table2(cfg, table_n.has_value());
    if (*dissect) return cmd_dissect(cfg);
    if (*standardize) return cmd_standardize(cfg);
    if (*sphere) return cmd_sphere(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Capped& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ncht::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
