// Command-line front end. Exit codes: 0 = success / signing found,
// 1 = error, 2 = obstruction found.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubesign/gf2.hpp"
#include "cubesign/io.hpp"
#include "cubesign/orthosolve.hpp"
#include "cubesign/pauli.hpp"
#include "cubesign/spectral.hpp"

namespace {

using namespace cubesign;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitObstruction = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void emit(const std::string& out_path, const auto& writer) {
  if (out_path.empty()) {
    writer(std::cout);
  } else {
    auto f = open_output(out_path);
    writer(f);
  }
}

int cmd_construct(const std::string& graph_path, const std::string& out_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  SigningMatrix m = construct_signing(g.s);
  auto report = verify_unitary_signing(m, g);
  if (!report.pass()) {
    std::cerr << "internal verification failed: " << report.witness << "\n";
    return kExitError;
  }
  emit(out_path, [&](std::ostream& o) { write_signing(o, m, g.degree()); });
  std::cout << "verified=true d=" << g.degree() << " complex="
            << (report.all_real ? "false" : "true") << "\n";
  return kExitOk;
}

int cmd_decide_orthogonal(const std::string& graph_path,
                          const std::string& out_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  CycleSystem sys = build_system(g);  // throws if Lemma inapplicable
  SolveResult result = solve(sys);
  if (auto* f = std::get_if<EdgeLabelling>(&result)) {
    SigningMatrix m = labelling_to_signing(g, *f);
    auto report = verify_unitary_signing(m, g);
    if (!report.pass() || !report.all_real) {
      std::cerr << "internal verification failed: " << report.witness << "\n";
      return kExitError;
    }
    emit(out_path, [&](std::ostream& o) { write_signing(o, m, g.degree()); });
    std::cout << "orthogonal_signing=true d=" << g.degree() << "\n";
    return kExitOk;
  }
  const auto& cert = std::get<ParityCertificate>(result);
  if (!verify_certificate(g, cert)) {
    std::cerr << "internal certificate verification failed\n";
    return kExitError;
  }
  emit(out_path, [&](std::ostream& o) { write_certificate(o, cert, g.n); });
  std::cout << "orthogonal_signing=false certificate_cycles="
            << cert.cycles.size() << "\n";
  return kExitObstruction;
}

int cmd_verify(const std::string& signing_path, const std::string& graph_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  SigningMatrix m = read_signing_file(signing_path);
  auto r = verify_unitary_signing(m, g);
  std::ostream& out = r.pass() ? std::cout : std::cerr;
  out << "support_ok=" << r.support_ok << " entries_unit=" << r.entries_unit
      << " hermitian_ok=" << r.hermitian_ok << " square_ok=" << r.square_ok
      << " d=" << r.degree << " real=" << r.all_real << "\n";
  if (r.pass()) {
    std::cout << r.eigenvalue_statement() << "\n";
    return kExitOk;
  }
  std::cerr << "witness: " << r.witness << "\n";
  return kExitError;
}

int cmd_spectrum(const std::string& graph_path, const std::string& out_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  SpectrumReport r = eigenvalues(g);
  emit(out_path, [&](std::ostream& o) { write_spectrum(o, r); });
  return kExitOk;
}

int cmd_cut_bound(const std::string& graph_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  std::cout << "cut_lower_bound=" << cut_lower_bound(g).str() << "\n";
  return kExitOk;
}

int cmd_bckw(int samples, std::uint64_t seed) {
  BckwReport r = bckw_report(static_cast<std::size_t>(samples), seed);
  std::cout << "real_signing_verified=" << r.real_signing_verified << "\n"
            << "lambda2=" << r.lambda2 << "\n"
            << "cut_lower_bound=" << r.cut_bound.str() << "\n"
            << "sampled_bisections=" << r.sampled_bisections
            << " min_sampled_cut=" << r.min_sampled_cut << "\n"
            << "perfect_matching_edges=" << r.perfect_matching_edges << "\n"
            << "seed=" << r.seed << "\n"
            << "conclusion="
            << (r.conclusion() ? "Q+4 is a 5-regular orthogonally-signable "
                                 "graph with no perfect-matching bisection cut"
                               : "FAILED")
            << "\n";
  return r.conclusion() ? kExitOk : kExitError;
}

int cmd_mixing_check(const std::string& graph_path,
                     const std::string& set_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  VertexSet u = read_vertex_set_file(set_path, g.n);
  MixingReport r = mixing_degree_check(g, u);
  std::cout << "alpha=" << r.alpha.str() << " avg_degree=" << r.avg_degree.str()
            << " lambda=" << r.lambda << " two_sided_ok=" << r.two_sided_ok
            << " one_sided_ok=" << r.one_sided_ok << "\n";
  return (r.two_sided_ok && r.one_sided_ok) ? kExitOk : kExitError;
}

int cmd_experiment(int n, double multiplier, int trials, std::uint64_t seed,
                   const std::string& out_path) {
  ExperimentStats stats = random_cayley_experiment(n, multiplier, trials, seed);
  emit(out_path, [&](std::ostream& o) { write_experiment(o, stats); });
  return kExitOk;
}

int cmd_staircase(int n, const std::string& out_path) {
  ParityCertificate cert = staircase_certificate(n);
  CubelikeGraph g = CubelikeGraph::hypercube_plus(n);
  if (!verify_certificate(g, cert)) {
    std::cerr << "internal certificate verification failed\n";
    return kExitError;
  }
  emit(out_path, [&](std::ostream& o) { write_certificate(o, cert, n); });
  std::cout << "certificate_cycles=" << cert.cycles.size() << "\n";
  return kExitOk;
}

int cmd_sidon_check(const std::string& graph_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  bool sidon = is_sidon(g.s);
  std::cout << "sidon=" << (sidon ? "true" : "false")
            << " common_neighbor_check="
            << (common_neighbor_check(g) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_feasibility(const std::string& graph_path) {
  CubelikeGraph g = read_graph_file(graph_path);
  FeasibilityVerdict v = unitary_feasibility_sidon(g.s);
  std::cout << (v.infeasible ? "verdict=Infeasible" : "verdict=Feasible")
            << " reason=\"" << v.reason << "\"\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary and orthogonal signings of cubelike graphs"};
  app.require_subcommand(1);

  std::string graph_path, signing_path, set_path, out_path;
  int n = 4;
  int trials = 100;
  int samples = 10000;
  double multiplier = 3.0;
  std::uint64_t seed = 1;

  auto* construct = app.add_subcommand("construct",
                                       "Build a unitary signing from the "
                                       "anticommuting Pauli-word family");
  construct->add_option("graph", graph_path, "graph file")->required();
  construct->add_option("--out", out_path, "signing output path");

  auto* decide = app.add_subcommand(
      "decide-orthogonal",
      "Decide orthogonal signability via the 4-cycle GF(2) system");
  decide->add_option("graph", graph_path, "graph file")->required();
  decide->add_option("--out", out_path, "signing/certificate output path");

  auto* verify = app.add_subcommand("verify", "Verify a signing file");
  verify->add_option("signing", signing_path, "signing file")->required();
  verify->add_option("graph", graph_path, "graph file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Exact integer spectrum");
  spectrum->add_option("graph", graph_path, "graph file")->required();
  spectrum->add_option("--out", out_path, "report output path");

  auto* cut = app.add_subcommand("cut-bound", "Spectral bisection cut bound");
  cut->add_option("graph", graph_path, "graph file")->required();

  auto* bckw = app.add_subcommand("bckw", "Reproduce the Q+4 answer to the "
                                          "BCKW question");
  bckw->add_option("--trials", samples, "sampled bisections");
  bckw->add_option("--seed", seed, "PRNG seed");

  auto* mixing = app.add_subcommand("mixing-check",
                                    "Expander-mixing degree bound on a set");
  mixing->add_option("graph", graph_path, "graph file")->required();
  mixing->add_option("vertexset", set_path, "vertex-set file")->required();

  auto* experiment = app.add_subcommand(
      "experiment", "Random generating sets: lambda/d distribution");
  experiment->add_option("--n", n, "dimension")->required();
  experiment->add_option("--multiplier", multiplier, "generators per dim");
  experiment->add_option("--trials", trials, "number of trials");
  experiment->add_option("--seed", seed, "PRNG seed");
  experiment->add_option("--out", out_path, "report output path");

  auto* staircase = app.add_subcommand(
      "staircase", "Staircase parity certificate for Q+n");
  staircase->add_option("n", n, "dimension, n = 1 or 2 (mod 4)")->required();
  staircase->add_option("--out", out_path, "certificate output path");

  auto* sidon = app.add_subcommand("sidon-check", "Sidon-set test");
  sidon->add_option("graph", graph_path, "graph file")->required();

  auto* feasibility = app.add_subcommand(
      "feasibility", "Anticommuting-family bound on unitary signings");
  feasibility->add_option("graph", graph_path, "graph file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(graph_path, out_path);
    if (decide->parsed()) return cmd_decide_orthogonal(graph_path, out_path);
    if (verify->parsed()) return cmd_verify(signing_path, graph_path);
    if (spectrum->parsed()) return cmd_spectrum(graph_path, out_path);
    if (cut->parsed()) return cmd_cut_bound(graph_path);
    if (bckw->parsed()) return cmd_bckw(samples, seed);
    if (mixing->parsed()) return cmd_mixing_check(graph_path, set_path);
    if (experiment->parsed()) {
      return cmd_experiment(n, multiplier, trials, seed, out_path);
    }
    if (staircase->parsed()) return cmd_staircase(n, out_path);
    if (sidon->parsed()) return cmd_sidon_check(graph_path);
    if (feasibility->parsed()) return cmd_feasibility(graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
