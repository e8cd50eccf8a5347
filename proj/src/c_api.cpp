#include "evgi/evgi.h"

#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"

#include "evgi/error.hpp"
#include "evgi/graph.hpp"
#include "evgi/oracle.hpp"
#include "evgi/pipeline.hpp"
#include "evgi/spectral.hpp"

struct evgi_graph
{
  evgi::Graph graph;
};

struct evgi_spectrum
{
  std::vector<double> eigenvalues;
  std::vector<std::size_t> multiplicities;
  std::vector<std::string> warnings;
};

struct evgi_aut
{
  std::string order;
  bool verified = true;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
  std::vector<std::string> diagnostics;
  evgi_spectrum spectrum;
  std::string projections;
};

struct evgi_iso
{
  bool isomorphic = false;
  std::string reason;
  std::size_t degree = 0;
  std::vector<std::uint32_t> witness;
  std::vector<std::string> diagnostics;
};

namespace
{

thread_local std::string last_error;

evgi_status fail(evgi_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

template <class F>
evgi_status guarded(F &&body)
{
  last_error.clear();
  try {
    body();
    return EVGI_OK;
  } catch (evgi::InputError const &e) {
    return fail(EVGI_PARSE_ERROR, e.what());
  } catch (evgi::CapExceeded const &e) {
    return fail(EVGI_CAP_EXCEEDED, e.what());
  } catch (evgi::ToleranceError const &e) {
    return fail(EVGI_TOLERANCE_ERROR, e.what());
  } catch (std::invalid_argument const &e) {
    return fail(EVGI_INVALID_ARGUMENT, e.what());
  } catch (std::length_error const &e) {
    return fail(EVGI_INVALID_ARGUMENT, e.what());
  } catch (std::bad_alloc const &) {
    return fail(EVGI_INTERNAL_ERROR, "out of memory");
  } catch (std::exception const &e) {
    return fail(EVGI_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(EVGI_INTERNAL_ERROR, "unknown error");
  }
}

evgi::PipelineOptions to_options(evgi_options const *opt)
{
  evgi::PipelineOptions o;
  if (!opt)
    return o;
  if (opt->tol_eig < 0 || opt->tol_sweep < 0 || !(opt->tol_point > 0) || !(opt->tol_gram > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (opt->cap < 1)
    throw std::invalid_argument("cap must be at least 1");
  o.eig_tol = opt->tol_eig;
  o.sweep_tol = opt->tol_sweep;
  o.point_tol = opt->tol_point;
  o.gram_tol = opt->tol_gram;
  o.cap = static_cast<std::size_t>(std::min<std::uint64_t>(opt->cap, std::numeric_limits<std::size_t>::max()));
  return o;
}

evgi_spectrum summarize(evgi::SpectralDecomposition const &dec)
{
  evgi_spectrum s;
  for (auto const &g : dec.groups) {
    s.eigenvalues.push_back(g.eigenvalue);
    s.multiplicities.push_back(g.multiplicity);
  }
  s.warnings = dec.warnings;
  return s;
}

std::vector<std::uint32_t> images_of(evgi::Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

evgi::Permutation from_images(std::uint32_t const *images, std::size_t n)
{
  if (n > 0 && !images)
    throw std::invalid_argument("null image array");
  return evgi::Permutation(std::vector<evgi::Point>(images, images + n));
}

char *duplicate(std::string const &s)
{
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string projections_json(std::vector<evgi::ProjectedPointSet> const &projections)
{
  auto out = nlohmann::json::array();
  for (auto const &p : projections) {
    nlohmann::json entry;
    entry["subspace"] = p.subspace;
    entry["eigenvalue"] = p.eigenvalue;
    entry["dimension"] = p.basis.cols();
    auto coords = nlohmann::json::array();
    for (Eigen::Index c = 0; c < p.coordinates.cols(); ++c) {
      std::vector<double> col(p.coordinates.col(c).data(), p.coordinates.col(c).data() + p.coordinates.rows());
      coords.push_back(col);
    }
    entry["points"] = coords;
    entry["fiber"] = p.fiber;
    entry["warnings"] = p.warnings;
    out.push_back(entry);
  }
  return out.dump();
}

} // namespace

extern "C" {

void evgi_options_init(evgi_options *opt)
{
  if (!opt)
    return;
  evgi::PipelineOptions d;
  opt->tol_eig = d.eig_tol;
  opt->tol_sweep = d.sweep_tol;
  opt->tol_point = d.point_tol;
  opt->tol_gram = d.gram_tol;
  opt->cap = d.cap;
}

const char *evgi_last_error(void) { return last_error.c_str(); }

const char *evgi_status_name(evgi_status status)
{
  switch (status) {
  case EVGI_OK: return "ok";
  case EVGI_INVALID_ARGUMENT: return "invalid argument";
  case EVGI_PARSE_ERROR: return "parse error";
  case EVGI_CAP_EXCEEDED: return "cap exceeded";
  case EVGI_TOLERANCE_ERROR: return "tolerance error";
  case EVGI_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

void evgi_string_free(char *s) { delete[] s; }

evgi_status evgi_graph_create(size_t n, evgi_graph **out)
{
  if (!out)
    return fail(EVGI_INVALID_ARGUMENT, "null output");
  *out = nullptr;
  return guarded([&] { *out = new evgi_graph{evgi::Graph(n)}; });
}

evgi_status evgi_graph_add_edge(evgi_graph *g, size_t u, size_t v)
{
  if (!g)
    return fail(EVGI_INVALID_ARGUMENT, "null graph");
  return guarded([&] {
    if (u >= g->graph.vertex_count() || v >= g->graph.vertex_count())
      throw std::invalid_argument("edge vertex out of range");
    g->graph.add_edge(static_cast<evgi::Point>(u), static_cast<evgi::Point>(v));
  });
}

evgi_status evgi_graph_parse(const char *text, evgi_format format, evgi_graph **out)
{
  if (!out || !text)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string_view t(text);
    evgi::GraphFormat f;
    switch (format) {
    case EVGI_FORMAT_EDGE_LIST: f = evgi::GraphFormat::edge_list; break;
    case EVGI_FORMAT_GRAPH6: f = evgi::GraphFormat::graph6; break;
    default: f = evgi::detect_format(t);
    }
    *out = new evgi_graph{evgi::parse_graph(t, f)};
  });
}

evgi_status evgi_graph_relabel(const evgi_graph *g, const uint32_t *images, evgi_graph **out)
{
  if (!g || !out)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = from_images(images, g->graph.vertex_count());
    *out = new evgi_graph{g->graph.relabeled(p)};
  });
}

size_t evgi_graph_vertex_count(const evgi_graph *g) { return g ? g->graph.vertex_count() : 0; }
size_t evgi_graph_edge_count(const evgi_graph *g) { return g ? g->graph.edge_count() : 0; }
int evgi_graph_equal(const evgi_graph *a, const evgi_graph *b) { return a && b && a->graph == b->graph ? 1 : 0; }
void evgi_graph_destroy(evgi_graph *g) { delete g; }

evgi_status evgi_spectrum_compute(const evgi_graph *g, const evgi_options *opt, evgi_spectrum **out)
{
  if (!g || !out)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto o = to_options(opt);
    auto dec = evgi::decompose(evgi::adjacency_matrix(g->graph), o.sweep_tol, o.eig_tol);
    *out = new evgi_spectrum(summarize(dec));
  });
}

size_t evgi_spectrum_group_count(const evgi_spectrum *s) { return s ? s->eigenvalues.size() : 0; }

double evgi_spectrum_eigenvalue(const evgi_spectrum *s, size_t i)
{
  return s && i < s->eigenvalues.size() ? s->eigenvalues[i] : 0.0;
}

size_t evgi_spectrum_multiplicity(const evgi_spectrum *s, size_t i)
{
  return s && i < s->multiplicities.size() ? s->multiplicities[i] : 0;
}

size_t evgi_spectrum_warning_count(const evgi_spectrum *s) { return s ? s->warnings.size() : 0; }

const char *evgi_spectrum_warning(const evgi_spectrum *s, size_t i)
{
  return s && i < s->warnings.size() ? s->warnings[i].c_str() : nullptr;
}

void evgi_spectrum_destroy(evgi_spectrum *s) { delete s; }

evgi_status evgi_automorphism_group(const evgi_graph *g, const evgi_options *opt, evgi_aut **out)
{
  if (!g || !out)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = evgi::automorphism_group(g->graph, to_options(opt));
    auto a = std::make_unique<evgi_aut>();
    a->order = r.order.str();
    a->verified = r.verified;
    a->degree = g->graph.vertex_count();
    for (auto const &p : r.generators)
      a->generators.push_back(images_of(p));
    a->diagnostics = r.diagnostics;
    a->spectrum = summarize(r.spectrum);
    a->projections = projections_json(r.projections);
    *out = a.release();
  });
}

const char *evgi_aut_order(const evgi_aut *a) { return a ? a->order.c_str() : nullptr; }
int evgi_aut_verified(const evgi_aut *a) { return a && a->verified ? 1 : 0; }
size_t evgi_aut_degree(const evgi_aut *a) { return a ? a->degree : 0; }
size_t evgi_aut_generator_count(const evgi_aut *a) { return a ? a->generators.size() : 0; }

const uint32_t *evgi_aut_generator(const evgi_aut *a, size_t i)
{
  return a && i < a->generators.size() ? a->generators[i].data() : nullptr;
}

size_t evgi_aut_diagnostic_count(const evgi_aut *a) { return a ? a->diagnostics.size() : 0; }

const char *evgi_aut_diagnostic(const evgi_aut *a, size_t i)
{
  return a && i < a->diagnostics.size() ? a->diagnostics[i].c_str() : nullptr;
}

const evgi_spectrum *evgi_aut_spectrum(const evgi_aut *a) { return a ? &a->spectrum : nullptr; }

char *evgi_aut_projections_json(const evgi_aut *a) { return a ? duplicate(a->projections) : nullptr; }

void evgi_aut_destroy(evgi_aut *a) { delete a; }

evgi_status evgi_isomorphic(const evgi_graph *g1, const evgi_graph *g2, const evgi_options *opt,
                            evgi_iso **out)
{
  if (!g1 || !g2 || !out)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = evgi::isomorphic(g1->graph, g2->graph, to_options(opt));
    auto res = std::make_unique<evgi_iso>();
    res->isomorphic = r.isomorphic;
    res->reason = r.reason;
    res->degree = g1->graph.vertex_count();
    if (r.witness)
      res->witness.assign(r.witness->begin(), r.witness->end());
    res->diagnostics = r.diagnostics;
    *out = res.release();
  });
}

int evgi_iso_decision(const evgi_iso *r) { return r && r->isomorphic ? 1 : 0; }
const char *evgi_iso_reason(const evgi_iso *r) { return r ? r->reason.c_str() : nullptr; }

const uint32_t *evgi_iso_witness(const evgi_iso *r)
{
  return r && r->isomorphic ? r->witness.data() : nullptr;
}

size_t evgi_iso_degree(const evgi_iso *r) { return r ? r->degree : 0; }
size_t evgi_iso_diagnostic_count(const evgi_iso *r) { return r ? r->diagnostics.size() : 0; }

const char *evgi_iso_diagnostic(const evgi_iso *r, size_t i)
{
  return r && i < r->diagnostics.size() ? r->diagnostics[i].c_str() : nullptr;
}

void evgi_iso_destroy(evgi_iso *r) { delete r; }

char *evgi_permutation_cycles(const uint32_t *images, size_t n, int one_based)
{
  char *out = nullptr;
  guarded([&] { out = duplicate(from_images(images, n).to_cycle_string(one_based != 0)); });
  return out;
}

evgi_status evgi_permutation_parse_cycles(const char *text, size_t n, int one_based, uint32_t *images)
{
  if (!text || (n > 0 && !images))
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto p = evgi::Permutation::parse_cycles(text, n, one_based != 0);
    std::copy(p.images().begin(), p.images().end(), images);
  });
}

evgi_status evgi_group_order(size_t n, const uint32_t *images, size_t count, char **order)
{
  if (!order || (count > 0 && !images))
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  *order = nullptr;
  return guarded([&] {
    std::vector<evgi::Permutation> gens;
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(from_images(images + i * n, n));
    *order = duplicate(evgi::PermGroup::generate(n, gens).order().str());
  });
}

evgi_status evgi_verify_automorphism(const evgi_graph *g, const uint32_t *images, int *ok)
{
  if (!g || !ok)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *ok = evgi::verify_automorphism(g->graph, from_images(images, g->graph.vertex_count())) ? 1 : 0;
  });
}

evgi_status evgi_oracle_aut_count(const evgi_graph *g, uint64_t *count)
{
  if (!g || !count)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *count = evgi::oracle::brute_aut(g->graph).size(); });
}

evgi_status evgi_oracle_isomorphic(const evgi_graph *g1, const evgi_graph *g2, int *isomorphic)
{
  if (!g1 || !g2 || !isomorphic)
    return fail(EVGI_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *isomorphic = evgi::oracle::brute_iso(g1->graph, g2->graph).has_value() ? 1 : 0; });
}

} // extern "C"
