#include "garside/serialize.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace garside {

namespace {

using nlohmann::ordered_json;

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedPseudoAnosov: return "certified-pseudo-anosov";
    case VerdictKind::ReducibilityWitness: return "reducibility-witness";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* witness_name(WitnessType w) {
  switch (w) {
    case WitnessType::PreservedRoundCurve: return "preserved-round-curve";
    case WitnessType::NeverCrossingPair: return "never-crossing-pair";
    case WitnessType::AlwaysCrossingPair: return "always-crossing-pair";
  }
  return "preserved-round-curve";
}

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["kind"] = kind_name(v.kind);
  j["n"] = v.n;
  j["inf"] = v.inf;
  j["canonical_length"] = v.canonical_length;
  if (v.witness) {
    ordered_json w;
    w["type"] = witness_name(*v.witness);
    if (v.curve) {
      w["power"] = v.curve->k;
      w["curve"] = {v.curve->curve.lo, v.curve->curve.hi};
    }
    if (v.pair) w["pair"] = {v.pair->first, v.pair->second};
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (v.position_xa || v.position_xb) {
    ordered_json p;
    if (v.position_xa) p["xA"] = *v.position_xa;
    if (v.position_xb) p["xB"] = *v.position_xb;
    j["subword_positions"] = std::move(p);
  } else {
    j["subword_positions"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string sample_report_to_json(const SampleReport& rep) {
  ordered_json j;
  j["ok"] = rep.ok;
  if (!rep.ok) j["error"] = rep.error;
  j["n"] = rep.n;
  j["l"] = rep.l;
  j["sample_count"] = rep.sample_count;
  j["seed"] = rep.seed;
  j["certified"] = rep.certified;
  j["witness"] = rep.witness;
  j["inconclusive"] = rep.inconclusive;
  j["proportion_certified"] = fixed9(rep.proportion_certified);
  j["ci_lo"] = fixed9(rep.ci_lo);
  j["ci_hi"] = fixed9(rep.ci_hi);
  return j.dump(2) + "\n";
}

std::string count_table_csv(const CountTable& t) {
  const bool with_patterns = !t.pattern_names.empty();
  std::ostringstream os;
  os << (with_patterns ? "l,N,N°,N_w,N°_w" : "l,N,N°") << "\n";
  for (int l = 0; l <= t.lmax; ++l) {
    const auto i = std::size_t(l);
    os << l << ',' << t.paths[i].get_str() << ',' << t.loops[i].get_str();
    if (with_patterns)
      os << ',' << t.avoid_paths[i].get_str() << ',' << t.avoid_loops[i].get_str();
    os << "\n";
  }
  return os.str();
}

std::string spheres_csv(const std::vector<SphereShapeCounts>& rows) {
  std::ostringstream os;
  os << "l,shape_i,shape_ii,shape_iii,total\n";
  for (const auto& r : rows)
    os << r.l << ',' << r.shape_i.get_str() << ',' << r.shape_ii.get_str() << ','
       << r.shape_iii.get_str() << ',' << r.total.get_str() << "\n";
  return os.str();
}

std::string proportions_csv(const std::vector<ProportionRow>& rows) {
  std::ostringstream os;
  os << "l,exact_bound_num,exact_bound_den,sampled,ci_lo,ci_hi\n";
  for (const auto& r : rows)
    os << r.l << ',' << r.exact_bound.get_num().get_str() << ','
       << r.exact_bound.get_den().get_str() << ',' << fixed9(r.sampled) << ','
       << fixed9(r.ci_lo) << ',' << fixed9(r.ci_hi) << "\n";
  return os.str();
}

namespace {

ordered_json cache_header(int n, int k, const std::vector<std::string>& removed,
                          std::size_t vertex_count, std::size_t edge_count) {
  ordered_json j;
  j["format"] = "lw-graph-cache";
  j["version"] = 1;
  j["n"] = n;
  j["k"] = k;
  j["removed_patterns"] = removed;
  j["vertex_count"] = vertex_count;
  j["edge_count"] = edge_count;
  return j;
}

}  // namespace

std::string graph_cache_json(const LWGraph& g) {
  ordered_json j = cache_header(g.n, 1, {}, g.vertex_count(), g.edge_count);
  auto& edges = j["edges"] = ordered_json::array();
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (auto v : g.out[u]) edges.push_back({u, v});
  return j.dump() + "\n";
}

std::string lift_cache_json(const LiftedGraph& gk) {
  ordered_json j = cache_header(gk.base->n, gk.k, gk.removed_patterns,
                                gk.vertex_count(), gk.edge_count());
  auto& edges = j["edges"] = ordered_json::array();
  for (std::uint32_t u = 0; u < gk.vertex_count(); ++u)
    for (auto v : gk.out[u]) edges.push_back({u, v});
  return j.dump() + "\n";
}

LWGraph graph_from_cache_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("graph cache: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "lw-graph-cache" ||
      j.value("version", 0) != 1)
    throw std::runtime_error("graph cache: unrecognized header");
  if (j.value("k", 0) != 1)
    throw std::runtime_error("graph cache: only base graphs (order 1) can be loaded");
  const int n = j.value("n", 0);
  if (n < 3 || n > kMaxStrands)
    throw std::runtime_error("graph cache: strand count out of range");

  LWGraph g;
  g.n = n;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[std::size_t(i)] = i + 1;
  do {
    SimpleBraid s{Permutation::from_image(img)};
    if (s.is_identity() || s.is_half_twist()) continue;
    g.vertices.push_back(s);
  } while (std::next_permutation(img.begin(), img.end()));
  const std::size_t v = g.vertices.size();
  if (j.value("vertex_count", std::size_t(0)) != v)
    throw std::runtime_error("graph cache: vertex count mismatch");
  for (const auto& s : g.vertices) {
    g.starting.push_back(s.starting_set());
    g.finishing.push_back(s.finishing_set());
  }
  g.out.assign(v, {});
  g.in.assign(v, {});
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::runtime_error("graph cache: missing edge list");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("graph cache: malformed edge");
    const auto u = e[0].get<std::uint64_t>();
    const auto w = e[1].get<std::uint64_t>();
    if (u >= v || w >= v) throw std::runtime_error("graph cache: edge index out of range");
    if (!g.starting[w].subset_of(g.finishing[u]))
      throw std::runtime_error("graph cache: edge is not left-weighted");
    g.out[std::size_t(u)].push_back(std::uint32_t(w));
    g.in[std::size_t(w)].push_back(std::uint32_t(u));
    ++g.edge_count;
  }
  if (j.value("edge_count", std::size_t(0)) != g.edge_count)
    throw std::runtime_error("graph cache: edge count mismatch");
  for (auto& row : g.out) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::runtime_error("graph cache: duplicate edge");
  }
  for (auto& row : g.in) std::sort(row.begin(), row.end());
  return g;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os.write(content.data(), std::streamsize(content.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace garside
