#include "garside/census.hpp"
#include "garside/certify.hpp"
#include "garside/counting.hpp"
#include "garside/lw_graph.hpp"
#include "garside/serialize.hpp"
#include "garside/spectral.hpp"
#include "garside/verify.hpp"
#include "garside/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using garside::LWGraph;
using nlohmann::ordered_json;

std::string join_words(const std::vector<std::string>& parts) {
  std::string word;
  for (const auto& p : parts) {
    if (!word.empty()) word += ' ';
    word += p;
  }
  return word;
}

// Writes to the path when given, otherwise to standard output.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    garside::write_text_file(out_path, content);
}

LWGraph obtain_graph(int n, const std::string& cache_dir) {
  if (cache_dir.empty()) return garside::build_graph(n);
  const std::string path =
      cache_dir + "/lw-graph-n" + std::to_string(n) + ".json";
  if (std::filesystem::exists(path))
    return garside::graph_from_cache_json(garside::read_text_file(path));
  LWGraph g = garside::build_graph(n);
  std::filesystem::create_directories(cache_dir);
  garside::write_text_file(path, garside::graph_cache_json(g));
  return g;
}

std::vector<garside::NamedPattern> select_patterns(int n,
                                                   const std::vector<std::string>& names) {
  std::vector<garside::NamedPattern> patterns;
  if (names.empty()) {
    patterns.push_back(garside::named_pattern_xa(n));
    patterns.push_back(garside::named_pattern_xb(n));
    return patterns;
  }
  for (const auto& name : names) {
    if (name == "xA")
      patterns.push_back(garside::named_pattern_xa(n));
    else if (name == "xB")
      patterns.push_back(garside::named_pattern_xb(n));
    else if (name == "none")
      return {};
    else
      throw std::invalid_argument("unknown pattern '" + name +
                                  "' (expected xA, xB, or none)");
  }
  return patterns;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Braid groups with the Garside structure: left normal forms, the "
      "left-weighting graph, exact path/loop counts, avoidance spectra, "
      "pseudo-Anosov certification, and Cayley sphere/ball censuses."};
  app.require_subcommand(1);

  int n = 3;
  int l = 10;
  int lmax = 20;
  unsigned long seed = 1;
  long samples = 10000;
  std::string out_path;
  std::string format = "json";
  std::string cache_dir;
  int threads = int(std::max(1u, std::thread::hardware_concurrency()));
  std::size_t lift_cap = garside::kDefaultLiftCap;
  std::vector<std::string> word_parts;
  std::vector<std::string> pattern_names;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of strands")->check(CLI::Range(3, 7));
  };
  auto add_common_io = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--cache", cache_dir, "graph cache directory");
  };

  CLI::App* cmd_nf = app.add_subcommand("nf", "left normal form of a braid word");
  add_n(cmd_nf);
  cmd_nf->add_option("word", word_parts,
                     "braid word: s<i> for a generator, S<i> for its inverse, "
                     "D/d for the half twist and its inverse");

  CLI::App* cmd_graph =
      app.add_subcommand("graph", "build the left-weighting graph and export it");
  add_n(cmd_graph);
  add_common_io(cmd_graph);

  CLI::App* cmd_counts =
      app.add_subcommand("counts", "exact path/loop counts with avoidance columns");
  add_n(cmd_counts);
  add_common_io(cmd_counts);
  cmd_counts->add_option("--lmax", lmax, "largest l in the table")
      ->check(CLI::Range(0, 100000));
  cmd_counts->add_option("--lift-cap", lift_cap, "lifted-graph vertex cap");
  cmd_counts->add_option("patterns", pattern_names,
                         "patterns to avoid: xA, xB (default both), or none");

  CLI::App* cmd_spectrum = app.add_subcommand(
      "spectrum", "growth rates of the graph and of its pattern-avoiding lifts");
  add_n(cmd_spectrum);
  add_common_io(cmd_spectrum);
  cmd_spectrum->add_option("--lift-cap", lift_cap, "lifted-graph vertex cap");
  cmd_spectrum->add_option("patterns", pattern_names,
                           "patterns to avoid: xA, xB (default both), or none");

  CLI::App* cmd_certify =
      app.add_subcommand("certify", "certify a rigid braid as pseudo-Anosov");
  add_n(cmd_certify);
  cmd_certify->add_option("--out", out_path, "output file (default: stdout)");
  cmd_certify->add_option("word", word_parts, "braid word (must be rigid)");

  CLI::App* cmd_sphere =
      app.add_subcommand("sphere", "Cayley sphere sizes split by normal-form shape");
  add_n(cmd_sphere);
  add_common_io(cmd_sphere);
  cmd_sphere->add_option("--lmax", lmax, "largest radius")->check(CLI::Range(0, 100000));

  CLI::App* cmd_ball = app.add_subcommand("ball", "Cayley ball sizes");
  add_n(cmd_ball);
  add_common_io(cmd_ball);
  cmd_ball->add_option("--l", l, "radius")->check(CLI::Range(0, 100000));

  CLI::App* cmd_sample = app.add_subcommand(
      "sample", "certify uniformly sampled rigid braids and compare with the exact bound");
  add_n(cmd_sample);
  add_common_io(cmd_sample);
  cmd_sample->add_option("--l", l, "canonical length of the sampled braids")
      ->check(CLI::Range(1, 100000));
  cmd_sample->add_option("--samples", samples, "number of draws")
      ->check(CLI::Range(long(1), long(100000000)));
  cmd_sample->add_option("--seed", seed, "random seed");
  cmd_sample->add_option("--threads", threads, "worker count")->check(CLI::Range(1, 256));
  cmd_sample->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_sample->add_option("--lift-cap", lift_cap, "lifted-graph vertex cap");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the acceptance suite");
  cmd_verify->add_option("--n", n, "restrict criteria to one strand count")
      ->check(CLI::Range(3, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int printed = app.exit(e);  // prints help or the error message
    return e.get_exit_code() == 0 ? printed : 2;
  }

  if (cmd_nf->parsed()) {
    const garside::BraidWord w = garside::parse_word(n, join_words(word_parts));
    const garside::NormalForm x = garside::normal_form(w);
    std::cout << x.str() << "\n";
    std::cout << "inf=" << x.inf() << " sup=" << x.sup()
              << " canonical_length=" << x.canonical_length() << " rigid="
              << (x.canonical_length() == 0 ? "n/a" : (x.is_rigid() ? "yes" : "no"))
              << "\n";
    return 0;
  }

  if (cmd_graph->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    emit(out_path, garside::graph_cache_json(g));
    std::cerr << "graph: n=" << n << " vertices=" << g.vertex_count()
              << " edges=" << g.edge_count << "\n";
    return 0;
  }

  if (cmd_counts->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    const auto patterns = select_patterns(n, pattern_names);
    const garside::CountTable t =
        garside::build_count_table(g, patterns, lmax, false, lift_cap);
    emit(out_path, garside::count_table_csv(t));
    return 0;
  }

  if (cmd_spectrum->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    const auto patterns = select_patterns(n, pattern_names);
    const garside::SpectrumReport base = garside::spectral_radius(g);
    ordered_json j;
    j["n"] = n;
    j["gamma"] = base.gamma;
    j["residual"] = base.residual;
    j["converged"] = base.converged;
    auto& arr = j["patterns"] = ordered_json::array();
    for (const auto& pat : patterns) {
      const int k = int(pat.factors.size()) - 1;
      garside::LiftedGraph lifted = garside::lift(g, k, lift_cap);
      lifted = garside::forbid(lifted, pat.factors);
      const garside::SpectrumReport rw = garside::spectral_radius(lifted);
      ordered_json row;
      row["name"] = pat.name;
      row["gamma_w"] = rw.gamma;
      row["margin"] = base.gamma - rw.gamma;
      row["lift_vertices"] = lifted.vertex_count();
      row["converged"] = rw.converged;
      arr.push_back(std::move(row));
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_certify->parsed()) {
    const garside::BraidWord w = garside::parse_word(n, join_words(word_parts));
    const garside::NormalForm x = garside::normal_form(w);
    const garside::Verdict v = garside::certify(x);
    emit(out_path, garside::verdict_to_json(v));
    return 0;
  }

  if (cmd_sphere->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    std::vector<garside::SphereShapeCounts> rows;
    rows.reserve(std::size_t(lmax) + 1);
    for (int radius = 0; radius <= lmax; ++radius)
      rows.push_back(garside::sphere_count(g, radius));
    emit(out_path, garside::spheres_csv(rows));
    return 0;
  }

  if (cmd_ball->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    std::string csv = "l,ball\n";
    for (int radius = 0; radius <= l; ++radius)
      csv += std::to_string(radius) + "," + garside::ball_count(g, radius).get_str() + "\n";
    emit(out_path, csv);
    return 0;
  }

  if (cmd_sample->parsed()) {
    const LWGraph g = obtain_graph(n, cache_dir);
    const garside::SampleReport rep =
        garside::measure_pa_proportion(g, l, samples, seed, threads);
    if (!rep.ok) {
      std::cerr << "sample: " << rep.error << "\n";
      return 2;
    }
    const mpq_class bound = garside::exact_pa_bound(g, l, lift_cap);
    if (format == "csv") {
      garside::ProportionRow row;
      row.l = l;
      row.exact_bound = bound;
      row.sampled = rep.proportion_certified;
      row.ci_lo = rep.ci_lo;
      row.ci_hi = rep.ci_hi;
      emit(out_path, garside::proportions_csv({row}));
    } else {
      emit(out_path, garside::sample_report_to_json(rep));
    }
    std::fprintf(stderr, "exact certified lower bound at l=%d: %s/%s = %.6f\n", l,
                 bound.get_num().get_str().c_str(), bound.get_den().get_str().c_str(),
                 bound.get_d());
    return 0;
  }

  if (cmd_verify->parsed()) {
    const std::optional<int> filter =
        cmd_verify->count("--n") ? std::optional<int>(n) : std::nullopt;
    bool all_pass = true;
    for (const auto& r : garside::run_acceptance(filter)) {
      const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      std::printf("criterion %2d: %s  %s (%s) [%.2fs]\n", r.id, status, r.name.c_str(),
                  r.detail.c_str(), r.seconds);
      std::fflush(stdout);
      all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // unreachable: CLI11_PARSE handles its own errors
  } catch (const garside::ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const garside::LiftCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const garside::SizeCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
