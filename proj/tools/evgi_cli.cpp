#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evgi/evgi.h"

using nlohmann::json;

namespace
{

enum Exit
{
  exit_ok = 0,
  exit_not_isomorphic = 1,
  exit_input = 2,
  exit_internal = 3
};

struct RunConfig
{
  evgi_options options{};
  std::string format = "json";
  std::string input_format = "auto";
  bool dump_projections = false;
  bool oracle_check = false;
};

struct Failure
{
  int code;
  std::string message;
};

int exit_for(evgi_status s)
{
  return s == EVGI_PARSE_ERROR || s == EVGI_INVALID_ARGUMENT ? exit_input : exit_internal;
}

void check(evgi_status s, std::string const &context = {})
{
  if (s != EVGI_OK)
    throw Failure{exit_for(s), context + evgi_last_error()};
}

struct GraphDeleter
{
  void operator()(evgi_graph *g) const { evgi_graph_destroy(g); }
};
struct AutDeleter
{
  void operator()(evgi_aut *a) const { evgi_aut_destroy(a); }
};
struct IsoDeleter
{
  void operator()(evgi_iso *r) const { evgi_iso_destroy(r); }
};
struct SpectrumDeleter
{
  void operator()(evgi_spectrum *s) const { evgi_spectrum_destroy(s); }
};

using GraphPtr = std::unique_ptr<evgi_graph, GraphDeleter>;

std::string cycles(uint32_t const *images, std::size_t n)
{
  char *s = evgi_permutation_cycles(images, n, 1);
  if (!s)
    throw Failure{exit_internal, evgi_last_error()};
  std::string out(s);
  evgi_string_free(s);
  return out;
}

GraphPtr load_graph(std::string const &path, RunConfig const &cfg)
{
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw Failure{exit_input, path + ": cannot open file"};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  evgi_format f = EVGI_FORMAT_AUTO;
  if (cfg.input_format == "edge-list")
    f = EVGI_FORMAT_EDGE_LIST;
  else if (cfg.input_format == "graph6")
    f = EVGI_FORMAT_GRAPH6;
  evgi_graph *g = nullptr;
  check(evgi_graph_parse(text.c_str(), f, &g), path + ": ");
  return GraphPtr(g);
}

json spectrum_json(evgi_spectrum const *s)
{
  auto out = json::array();
  for (std::size_t i = 0; i < evgi_spectrum_group_count(s); ++i)
    out.push_back({{"eigenvalue", evgi_spectrum_eigenvalue(s, i)},
                   {"multiplicity", evgi_spectrum_multiplicity(s, i)}});
  return out;
}

json order_json(std::string const &order)
{
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(order.data(), order.data() + order.size(), v);
  if (ec == std::errc() && end == order.data() + order.size())
    return v;
  return order;
}

void print_spectrum_text(std::ostream &out, json const &spectrum)
{
  out << "spectrum:\n";
  for (auto const &e : spectrum)
    out << "  " << e["eigenvalue"].get<double>() << " x" << e["multiplicity"].get<std::size_t>() << "\n";
}

void print_diagnostics_text(std::ostream &out, json const &diagnostics)
{
  if (diagnostics.empty())
    return;
  out << "diagnostics:\n";
  for (auto const &d : diagnostics)
    out << "  " << d.get<std::string>() << "\n";
}

int run_aut(std::string const &path, RunConfig const &cfg)
{
  auto g = load_graph(path, cfg);
  evgi_aut *raw = nullptr;
  check(evgi_automorphism_group(g.get(), &cfg.options, &raw));
  std::unique_ptr<evgi_aut, AutDeleter> a(raw);

  std::size_t const n = evgi_aut_degree(a.get());
  std::string const order = evgi_aut_order(a.get());
  json report;
  report["order"] = order_json(order);
  report["generators"] = json::array();
  for (std::size_t i = 0; i < evgi_aut_generator_count(a.get()); ++i)
    report["generators"].push_back(cycles(evgi_aut_generator(a.get(), i), n));
  report["verified"] = evgi_aut_verified(a.get()) != 0;
  report["spectrum"] = spectrum_json(evgi_aut_spectrum(a.get()));
  report["diagnostics"] = json::array();
  for (std::size_t i = 0; i < evgi_aut_diagnostic_count(a.get()); ++i)
    report["diagnostics"].push_back(evgi_aut_diagnostic(a.get(), i));

  int code = exit_ok;
  if (cfg.oracle_check) {
    if (n <= 8) {
      std::uint64_t count = 0;
      check(evgi_oracle_aut_count(g.get(), &count));
      bool const agree = std::to_string(count) == order;
      report["diagnostics"].push_back("oracle check: brute force finds " + std::to_string(count) +
                                      (agree ? " automorphisms, matching" : " automorphisms, MISMATCH"));
      if (!agree)
        code = exit_internal;
    } else {
      report["diagnostics"].push_back("oracle check skipped: more than 8 vertices");
    }
  }

  if (cfg.dump_projections) {
    char *dump = evgi_aut_projections_json(a.get());
    std::cerr << dump << "\n";
    evgi_string_free(dump);
  }

  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "order: " << order << "\n";
    std::cout << "verified: " << (report["verified"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "generators:\n";
    for (auto const &s : report["generators"])
      std::cout << "  " << s.get<std::string>() << "\n";
    print_spectrum_text(std::cout, report["spectrum"]);
    print_diagnostics_text(std::cout, report["diagnostics"]);
  }
  return code;
}

int run_iso(std::string const &path1, std::string const &path2, RunConfig const &cfg)
{
  auto g1 = load_graph(path1, cfg);
  auto g2 = load_graph(path2, cfg);
  evgi_iso *raw = nullptr;
  check(evgi_isomorphic(g1.get(), g2.get(), &cfg.options, &raw));
  std::unique_ptr<evgi_iso, IsoDeleter> r(raw);

  bool const iso = evgi_iso_decision(r.get()) != 0;
  json report;
  report["decision"] = iso ? "isomorphic" : "not isomorphic";
  report["witness"] = nullptr;
  if (iso) {
    auto const *w = evgi_iso_witness(r.get());
    std::vector<std::size_t> one_based;
    for (std::size_t i = 0; i < evgi_iso_degree(r.get()); ++i)
      one_based.push_back(std::size_t(w[i]) + 1);
    report["witness"] = one_based;
  }
  report["diagnostics"] = json::array();
  std::string reason = evgi_iso_reason(r.get());
  if (!reason.empty())
    report["diagnostics"].push_back(reason);
  for (std::size_t i = 0; i < evgi_iso_diagnostic_count(r.get()); ++i)
    report["diagnostics"].push_back(evgi_iso_diagnostic(r.get(), i));

  int code = iso ? exit_ok : exit_not_isomorphic;
  if (cfg.oracle_check) {
    if (evgi_graph_vertex_count(g1.get()) <= 8 && evgi_graph_vertex_count(g2.get()) <= 8) {
      int want = 0;
      check(evgi_oracle_isomorphic(g1.get(), g2.get(), &want));
      bool const agree = (want != 0) == iso;
      report["diagnostics"].push_back(std::string("oracle check: brute force says ") +
                                      (want ? "isomorphic" : "not isomorphic") +
                                      (agree ? ", matching" : ", MISMATCH"));
      if (!agree)
        code = exit_internal;
    } else {
      report["diagnostics"].push_back("oracle check skipped: more than 8 vertices");
    }
  }

  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "decision: " << report["decision"].get<std::string>() << "\n";
    if (iso) {
      std::cout << "witness:";
      std::size_t v = 1;
      for (auto const &w : report["witness"])
        std::cout << " " << v++ << "->" << w.get<std::size_t>();
      std::cout << "\n";
    }
    print_diagnostics_text(std::cout, report["diagnostics"]);
  }
  return code;
}

int run_spectrum(std::string const &path, RunConfig const &cfg)
{
  auto g = load_graph(path, cfg);
  evgi_spectrum *raw = nullptr;
  check(evgi_spectrum_compute(g.get(), &cfg.options, &raw));
  std::unique_ptr<evgi_spectrum, SpectrumDeleter> s(raw);
  json report;
  report["spectrum"] = spectrum_json(s.get());
  report["diagnostics"] = json::array();
  for (std::size_t i = 0; i < evgi_spectrum_warning_count(s.get()); ++i)
    report["diagnostics"].push_back(evgi_spectrum_warning(s.get(), i));
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    print_spectrum_text(std::cout, report["spectrum"]);
    print_diagnostics_text(std::cout, report["diagnostics"]);
  }
  return exit_ok;
}

GraphPtr make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const &edges)
{
  evgi_graph *g = nullptr;
  check(evgi_graph_create(n, &g));
  GraphPtr owned(g);
  for (auto [u, v] : edges)
    check(evgi_graph_add_edge(g, u, v));
  return owned;
}

GraphPtr graph_from_mask(std::size_t n, unsigned mask)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  unsigned bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1u)
        edges.emplace_back(i, j);
  return make_graph(n, edges);
}

int run_selfcheck(RunConfig const &cfg)
{
  std::size_t passed = 0, failed = 0;
  auto record = [&](bool ok, std::string const &what) {
    (ok ? passed : failed) += 1;
    if (!ok)
      std::cout << "FAIL " << what << "\n";
  };

  auto aut_matches = [&](evgi_graph const *g, std::string const &name) {
    evgi_aut *raw = nullptr;
    check(evgi_automorphism_group(g, &cfg.options, &raw));
    std::unique_ptr<evgi_aut, AutDeleter> a(raw);
    std::uint64_t count = 0;
    check(evgi_oracle_aut_count(g, &count));
    bool ok = std::to_string(count) == evgi_aut_order(a.get());
    for (std::size_t i = 0; i < evgi_aut_generator_count(a.get()); ++i) {
      int good = 0;
      check(evgi_verify_automorphism(g, evgi_aut_generator(a.get(), i), &good));
      ok = ok && good;
    }
    record(ok, name);
  };

  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
      auto g = graph_from_mask(n, mask);
      aut_matches(g.get(), "aut n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> path, cycle;
    for (std::size_t i = 0; i + 1 < n; ++i)
      path.emplace_back(i, i + 1);
    cycle = path;
    cycle.emplace_back(0, n - 1);
    aut_matches(make_graph(n, path).get(), "path " + std::to_string(n));
    aut_matches(make_graph(n, cycle).get(), "cycle " + std::to_string(n));
  }

  auto iso_matches = [&](evgi_graph const *a, evgi_graph const *b, std::string const &name) {
    evgi_iso *raw = nullptr;
    check(evgi_isomorphic(a, b, &cfg.options, &raw));
    std::unique_ptr<evgi_iso, IsoDeleter> r(raw);
    int want = 0;
    check(evgi_oracle_isomorphic(a, b, &want));
    record((want != 0) == (evgi_iso_decision(r.get()) != 0), name);
  };
  auto c4k1 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto k14 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  iso_matches(c4k1.get(), k14.get(), "C4+K1 vs K1,4");
  for (unsigned mask = 0; mask < 64; mask += 7) {
    auto g = graph_from_mask(4, mask);
    std::vector<uint32_t> shift = {2, 0, 3, 1};
    evgi_graph *rel = nullptr;
    check(evgi_graph_relabel(g.get(), shift.data(), &rel));
    GraphPtr relabeled(rel);
    iso_matches(g.get(), relabeled.get(), "relabeled mask=" + std::to_string(mask));
  }

  std::cout << "selfcheck: " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? exit_ok : exit_internal;
}

void report_failure(Failure const &f, RunConfig const &cfg)
{
  std::cerr << "evgi: " << f.message << "\n";
  if (cfg.format == "json")
    std::cout << json{{"diagnostics", json::array({f.message})}}.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
  RunConfig cfg;
  evgi_options_init(&cfg.options);

  CLI::App app{"Graph automorphism groups and isomorphism via eigenspace geometry"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol-eig", cfg.options.tol_eig, "eigenvalue grouping tolerance (default 1e-8*max(1,n))")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-sweep", cfg.options.tol_sweep, "Jacobi sweep tolerance (default 1e-12*n*max|A|)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-point", cfg.options.tol_point, "projected point merge tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-gram", cfg.options.tol_gram, "Gram quantization tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap", cfg.options.cap, "largest eigenspace group listed explicitly")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--input-format", cfg.input_format, "graph file format")
      ->check(CLI::IsMember({"auto", "edge-list", "graph6"}))
      ->capture_default_str();
  app.add_flag("--dump-projections", cfg.dump_projections, "write projected point sets to stderr as JSON");
  app.add_flag("--oracle-check", cfg.oracle_check, "compare with brute force when n <= 8");

  std::string file1, file2;
  auto *aut = app.add_subcommand("aut", "automorphism group of a graph");
  aut->add_option("file", file1, "graph file, - for stdin")->required();
  auto *iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
  iso->add_option("file1", file1)->required();
  iso->add_option("file2", file2)->required();
  auto *spectrum = app.add_subcommand("spectrum", "grouped adjacency spectrum");
  spectrum->add_option("file", file1, "graph file, - for stdin")->required();
  auto *selfcheck = app.add_subcommand("selfcheck", "oracle equivalence on built-in fixtures");
  selfcheck->group("");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*aut)
      return run_aut(file1, cfg);
    if (*iso)
      return run_iso(file1, file2, cfg);
    if (*spectrum)
      return run_spectrum(file1, cfg);
    return run_selfcheck(cfg);
  } catch (Failure const &f) {
    report_failure(f, cfg);
    return f.code;
  } catch (std::exception const &e) {
    report_failure({exit_internal, e.what()}, cfg);
    return exit_internal;
  }
}
