// Command line front end: sampling, invariant reports, collapse
// certificates, pattern counts, threshold sweeps and grid experiments.
// Exit codes: 0 success, 1 runtime failure, 2 bad configuration or usage,
// 3 experiment finished with partial per-trial failures.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquetop/collapse.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/cycles.hpp"
#include "cliquetop/density.hpp"
#include "cliquetop/filling.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/harness.hpp"
#include "cliquetop/homology.hpp"
#include "cliquetop/patterns.hpp"

namespace ct = cliquetop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

struct SourceOpts {
  std::string graph_file;
  std::string complex_file;
  int n = 0;
  double alpha = 0;
  std::uint64_t seed = 1;
  int dim_cap = 5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph_file, "read a graph file and take its clique complex");
    cmd->add_option("--complex", complex_file, "read a complex file");
    cmd->add_option("--n", n, "vertices for a sampled G(n, n^alpha)");
    cmd->add_option("--alpha", alpha, "edge probability exponent, negative");
    cmd->add_option("--seed", seed, "sampler seed")->capture_default_str();
    cmd->add_option("--dim-cap", dim_cap, "clique complex dimension cap")
        ->capture_default_str();
  }

  // True when the complex came with sampling parameters (n, p known).
  bool sampled() const { return graph_file.empty() && complex_file.empty(); }

  ct::Complex load() const {
    if (!complex_file.empty()) return ct::load_complex(complex_file);
    ct::Graph g = graph();
    return ct::clique_complex(g, dim_cap);
  }

  ct::Graph graph() const {
    if (!complex_file.empty()) return ct::load_complex(complex_file).one_skeleton();
    if (!graph_file.empty()) return ct::load_graph(graph_file);
    if (n < 2) throw ct::ConfigError("need --graph, --complex, or --n with --alpha");
    if (!(alpha < 0)) throw ct::ConfigError("--alpha must be negative so that p < 1");
    return ct::sample_gnp(n, std::pow(n, alpha), seed);
  }
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void print_betti(std::ostream& os, const char* label, const std::vector<long long>& b) {
  os << label << " =";
  for (long long v : b) os << ' ' << v;
  os << '\n';
}

int run_invariants(const SourceOpts& src, bool with_nu_tilde, const std::string& out_path) {
  ct::Complex x = src.load();
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  ct::DensityReport rep = ct::density_report(x, with_nu_tilde);
  os << "v = " << rep.v << "\ne = " << rep.e << "\nf = " << rep.f << '\n';
  os << "dimension = " << rep.dimension << '\n';
  os << "euler = " << rep.euler << '\n';
  os << "euler2 = " << rep.euler2 << '\n';
  os << "L = " << rep.L << '\n';
  os << "boundary_edges = " << rep.boundary_edge_count << '\n';
  os << "closed = " << (rep.closed ? 1 : 0) << '\n';
  if (rep.nu) os << "nu = " << ct::to_string(*rep.nu) << '\n';
  if (rep.nu_tilde) os << "nu_tilde = " << ct::to_string(*rep.nu_tilde) << '\n';
  print_betti(os, "betti_gf2", ct::betti(x, ct::Field::GF2));
  print_betti(os, "betti_q", ct::betti(x, ct::Field::Q));
  ct::TorsionScreen ts = ct::odd_torsion_screen(x);
  os << "odd_torsion_ruled_out = " << (ts.certified ? 1 : 0) << '\n';
  return kExitOk;
}

int run_collapse(const SourceOpts& src, bool trace, const std::string& out_path) {
  ct::Complex x = src.load();
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  ct::FreenessCertificate cert = ct::freeness_certificate(x);
  const char* outcome = "mixed_residue";
  switch (cert.outcome) {
    case ct::FreenessCertificate::Outcome::free_fundamental_group:
      outcome = "free_fundamental_group";
      break;
    case ct::FreenessCertificate::Outcome::obstructed_3_collapse:
      outcome = "obstructed_3_collapse";
      break;
    case ct::FreenessCertificate::Outcome::closed_residue: outcome = "closed_residue"; break;
    case ct::FreenessCertificate::Outcome::mixed_residue: outcome = "mixed_residue"; break;
  }
  os << "outcome = " << outcome << '\n';
  os << "steps = " << cert.steps.size() << '\n';
  os << "free_rank = " << cert.free_rank << '\n';
  os << "residue_edges = " << cert.residue.count(1) << '\n';
  os << "residue_triangles = " << cert.residue.count(2) << '\n';
  if (trace) os << ct::collapse_trace(cert.steps);
  return kExitOk;
}

int run_count(const SourceOpts& src, const std::string& patterns, long long cap,
              const std::string& out_path) {
  ct::Graph g = src.graph();
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  std::vector<std::string> names;
  {
    std::string t = patterns;
    for (char& c : t)
      if (c == ',') c = ' ';
    std::istringstream iss(t);
    std::string tok;
    while (iss >> tok) names.push_back(tok);
  }
  if (names.empty()) throw ct::ConfigError("--patterns is empty");
  os << "pattern,count,saturated,expected\n";
  for (const std::string& nm : names) {
    const ct::Pattern& p = ct::pattern_by_name(nm);
    ct::EmbeddingCount ec = ct::count_embeddings(g, p, cap);
    os << nm << ',' << ec.count << ',' << (ec.saturated ? 1 : 0) << ',';
    if (src.sampled()) {
      double pr = std::pow(src.n, src.alpha);
      double expect = 1.0;
      for (long long i = 0; i < p.complex.count(0); ++i) expect *= src.n - static_cast<double>(i);
      expect *= std::pow(pr, static_cast<double>(p.complex.count(1)));
      os << expect;
    } else {
      os << '-';
    }
    os << '\n';
  }
  return kExitOk;
}

int run_sweep(const ct::SweepSpec& spec, const std::string& out_prefix) {
  ct::SweepResult r = ct::threshold_sweep(spec);
  if (!out_prefix.empty()) {
    std::ofstream csv(out_prefix + ".csv");
    if (!csv) throw std::runtime_error("cannot write " + out_prefix + ".csv");
    ct::write_sweep_csv(csv, r);
    std::ofstream svg(out_prefix + ".svg");
    if (!svg) throw std::runtime_error("cannot write " + out_prefix + ".svg");
    ct::write_sweep_svg(svg, r);
  }
  std::cout << ct::sweep_summary(r);
  return kExitOk;
}

int run_experiment_cmd(ct::ExperimentConfig cfg, const std::string& config_file,
                       const std::string& out_path, const std::string& format,
                       bool omit_wall_ms) {
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) throw ct::ConfigError("cannot open config file " + config_file);
    cfg = ct::parse_config(in);
  }
  ct::ExperimentResult r = ct::run_experiment(cfg);
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  if (format == "csv") {
    ct::write_experiment_csv(os, r, !omit_wall_ms);
  } else if (format == "json") {
    ct::write_experiment_json(os, r, !omit_wall_ms);
  } else {
    throw ct::ConfigError("--format must be csv or json");
  }
  if (r.failures > 0) {
    std::cerr << r.failures << " of " << r.records.size() << " trials failed\n";
    return kExitPartial;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique complexes of random graphs: invariants, collapses, patterns, sweeps"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "sample G(n, n^alpha), write graph or complex");
  int sm_n = 50;
  double sm_alpha = -0.5;
  std::uint64_t sm_seed = 1;
  int sm_dim_cap = 5;
  std::string sm_out, sm_complex_out;
  sample->add_option("--n", sm_n, "vertices")->required();
  sample->add_option("--alpha", sm_alpha, "edge probability exponent, negative")->required();
  sample->add_option("--seed", sm_seed, "sampler seed")->capture_default_str();
  sample->add_option("--dim-cap", sm_dim_cap, "complex dimension cap")->capture_default_str();
  sample->add_option("--out", sm_out, "graph file (default stdout)");
  sample->add_option("--complex-out", sm_complex_out, "also write the clique complex here");

  // invariants
  auto* invariants = app.add_subcommand("invariants", "density and homology report");
  SourceOpts inv_src;
  inv_src.attach(invariants);
  bool inv_no_nu_tilde = false;
  std::string inv_out;
  invariants->add_flag("--no-nu-tilde", inv_no_nu_tilde, "skip the max density solver");
  invariants->add_option("--out", inv_out, "output file (default stdout)");

  // collapse
  auto* collapse = app.add_subcommand("collapse", "greedy collapse certificate");
  SourceOpts col_src;
  col_src.attach(collapse);
  bool col_trace = false;
  std::string col_out;
  collapse->add_flag("--trace", col_trace, "print one line per collapse step");
  collapse->add_option("--out", col_out, "output file (default stdout)");

  // count
  auto* count = app.add_subcommand("count", "embedding counts for built-in patterns");
  SourceOpts cnt_src;
  cnt_src.attach(count);
  std::string cnt_patterns = "k3,k4,s2,p2";
  long long cnt_cap = 2'000'000;
  std::string cnt_out;
  count->add_option("--patterns", cnt_patterns, "comma separated pattern names")
      ->capture_default_str();
  count->add_option("--cap", cnt_cap, "stop counting at this many embeddings")
      ->capture_default_str();
  count->add_option("--out", cnt_out, "output file (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "frequency of an event across alpha values");
  ct::SweepSpec sw;
  std::string sw_prefix;
  sweep->add_option("--n", sw.n, "vertices")->required();
  sweep->add_option("--alpha", sw.alphas, "alpha grid (repeat or list)")->required();
  sweep->add_option("--trials", sw.trials, "trials per alpha")->required();
  sweep->add_option("--seed", sw.base_seed, "base seed")->capture_default_str();
  sweep->add_option("--event", sw.event,
                    "contains:<pattern> | dimension>=<k> | b<k>_<q|gf2>_<zero|positive> | "
                    "collapsible_to_graph")
      ->required();
  sweep->add_option("--dim-cap", sw.dim_cap, "complex dimension cap")->capture_default_str();
  sweep->add_option("--out-prefix", sw_prefix, "write <prefix>.csv and <prefix>.svg");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "metric grid over n, alpha, trials");
  ct::ExperimentConfig ex;
  std::string ex_config, ex_out, ex_format = "csv";
  bool ex_omit_wall = false;
  experiment->add_option("--config", ex_config, "key = value config file (overrides flags)");
  experiment->add_option("--n", ex.n_values, "n grid");
  experiment->add_option("--alpha", ex.alpha_values, "alpha grid");
  experiment->add_option("--trials", ex.trials, "trials per cell")->capture_default_str();
  experiment->add_option("--seed", ex.base_seed, "base seed")->capture_default_str();
  experiment->add_option("--metrics", ex.metrics, "metric specs")->capture_default_str();
  experiment->add_option("--dim-cap", ex.dim_cap, "complex dimension cap")
      ->capture_default_str();
  experiment->add_option("--count-cap", ex.count_cap, "embedding count cap")
      ->capture_default_str();
  experiment->add_option("--out", ex_out, "output file (default stdout)");
  experiment->add_option("--format", ex_format, "csv or json")->capture_default_str();
  experiment->add_flag("--omit-wall-ms", ex_omit_wall,
                       "drop the timing column (byte-stable output)");

  // patterns
  auto* patterns = app.add_subcommand("patterns", "write built-in pattern files and registry");
  std::string pat_dir;
  patterns->add_option("--dir", pat_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sample) {
      if (!(sm_alpha < 0)) throw ct::ConfigError("--alpha must be negative");
      ct::Graph g = ct::sample_gnp(sm_n, std::pow(sm_n, sm_alpha), sm_seed);
      if (sm_out.empty()) {
        ct::write_graph(std::cout, g);
      } else {
        ct::save_graph(sm_out, g);
      }
      if (!sm_complex_out.empty())
        ct::save_complex(sm_complex_out, ct::clique_complex(g, sm_dim_cap));
      return kExitOk;
    }
    if (*invariants) return run_invariants(inv_src, !inv_no_nu_tilde, inv_out);
    if (*collapse) return run_collapse(col_src, col_trace, col_out);
    if (*count) return run_count(cnt_src, cnt_patterns, cnt_cap, cnt_out);
    if (*sweep) return run_sweep(sw, sw_prefix);
    if (*experiment)
      return run_experiment_cmd(ex, ex_config, ex_out, ex_format, ex_omit_wall);
    if (*patterns) {
      ct::write_pattern_files(pat_dir);
      std::cout << "wrote registry " << pat_dir << "/patterns.txt\n";
      return kExitOk;
    }
  } catch (const ct::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
