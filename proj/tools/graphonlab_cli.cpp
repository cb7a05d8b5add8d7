// graphonlab: homomorphism densities, edge-count distributions and
// quasirandomness checks for step graphons.
//
// Exit codes: 0 ok, 1 parse error, 2 guardrail exceeded, 3 invalid input.
// verify additionally returns 4 (NonbinomialEdgeCounts), 5 (NoC4Precondition)
// and 6 (contradiction flagged).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "graphonlab/graphonlab.hpp"

namespace {

using namespace graphonlab;

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kGuardrail = 2,
  kInvalidInput = 3,
  kNonbinomial = 4,
  kNoC4 = 5,
  kContradiction = 6,
};

struct CommonFlags {
  std::string builtin;
  std::vector<std::string> files;
  bool as_float = false;
  bool force = false;
  std::uint64_t limit = kDefaultEvaluationLimit;
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--builtin", flags.builtin, "Named template: P<k>, S<k>, C<k>, K<n>, mxP1:<k>");
  cmd->add_option("files", flags.files, "[graph-file] graphon-file")->required();
  cmd->add_flag("--float", flags.as_float, "Print decimals (17 significant digits)");
  cmd->add_flag("--force", flags.force, "Ignore the enumeration guardrail");
  cmd->add_option("--limit", flags.limit, "Guardrail: maximum assignment evaluations");
  cmd->add_option("--threads", flags.threads, "Worker cap (env GRAPHONLAB_THREADS)");
  cmd->add_option("--seed", flags.seed, "Seed for Monte Carlo and sampling");
}

ComputeOptions options_from(const CommonFlags& flags) {
  ComputeOptions options;
  options.limit = flags.limit;
  options.force = flags.force;
  options.threads = flags.threads;
  return options;
}

/// Resolves the template graph and graphon from --builtin and positionals.
std::pair<SimpleGraph, StepGraphon> load_inputs(const CommonFlags& flags) {
  const std::size_t expected = flags.builtin.empty() ? 2 : 1;
  if (flags.files.size() != expected) {
    throw Error(Errc::ParseError, flags.builtin.empty() ? "expected <graph-file> <graphon-file>"
                                                        : "expected <graphon-file> after --builtin");
  }
  SimpleGraph graph = flags.builtin.empty() ? io::parse_graph(io::read_file(flags.files[0]))
                                            : builtin_graph(flags.builtin);
  StepGraphon graphon = io::parse_graphon(io::read_file(flags.files.back()));
  return {std::move(graph), std::move(graphon)};
}

std::string render(const Scalar& x, bool as_float) { return as_float ? to_floating(x).str() : x.str(); }

std::string render(const EdgeCountPMF& pmf, bool as_float) {
  if (!as_float) return io::format_pmf(pmf);
  std::vector<Scalar> mass;
  for (const auto& p : pmf.mass()) mass.push_back(to_floating(p));
  return io::format_pmf(EdgeCountPMF(std::move(mass)));
}

int exit_code_for(Errc code) {
  if (code == Errc::ParseError) return kParseError;
  if (code == Errc::TooLarge) return kGuardrail;
  return kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphonlab: exact and Monte Carlo computations on step graphons"};
  app.require_subcommand(1);

  unsigned env_threads = 0;
  if (const char* env = std::getenv("GRAPHONLAB_THREADS")) env_threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));

  CommonFlags density_flags;
  std::uint64_t mc_samples = 0;
  auto* density = app.add_subcommand("density", "Homomorphism density t(F, W)");
  add_common(density, density_flags);
  density->add_option("--mc", mc_samples, "Monte Carlo with N samples instead of exact enumeration");

  CommonFlags edgedist_flags;
  std::uint64_t empirical_trials = 0;
  auto* edgedist = app.add_subcommand("edgedist", "Edge-count distribution N(S, W)");
  add_common(edgedist, edgedist_flags);
  edgedist->add_option("--empirical", empirical_trials, "Estimate from N sampled subgraphs");

  CommonFlags verify_flags;
  std::string p_text;
  double tol = kDefaultTolerance;
  auto* verify = app.add_subcommand("verify", "Probe the edge-count characterisation and replay the density-identity chain");
  add_common(verify, verify_flags);
  verify->add_option("--p", p_text, "Edge density of the reference binomial (default t(P1, W))");
  verify->add_option("--tol", tol, "Tolerance for floating comparisons");

  std::size_t sample_n = 0;
  std::string sample_graphon;
  std::uint64_t sample_seed = 0;
  auto* sample = app.add_subcommand("sample", "Draw a W-random graph");
  sample->add_option("n", sample_n, "Vertex count")->required();
  sample->add_option("graphon", sample_graphon, "Graphon file")->required();
  sample->add_option("--seed", sample_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  for (auto* flags : {&density_flags, &edgedist_flags, &verify_flags}) {
    if (flags->threads == 0) flags->threads = env_threads;
  }

  try {
    if (density->parsed()) {
      const auto [graph, graphon] = load_inputs(density_flags);
      const auto options = options_from(density_flags);
      if (mc_samples > 0) {
        const auto est = t_monte_carlo(graph, graphon, mc_samples, density_flags.seed, options);
        std::cout << est.mean.str() << " +/- " << est.std_error.str() << '\n';
      } else {
        std::cout << render(t_exact(graph, graphon, options), density_flags.as_float) << '\n';
      }
      return kOk;
    }

    if (edgedist->parsed()) {
      const auto [graph, graphon] = load_inputs(edgedist_flags);
      const auto options = options_from(edgedist_flags);
      if (empirical_trials > 0) {
        const auto rep = empirical_edge_pmf(graph, graphon, empirical_trials, edgedist_flags.seed, options);
        std::cout << io::format_pmf(rep.empirical) << '\n';
      } else {
        std::cout << render(edge_count_pmf_exact(graph, graphon, options), edgedist_flags.as_float) << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      const auto [graph, graphon] = load_inputs(verify_flags);
      const auto options = options_from(verify_flags);
      std::optional<Scalar> p;
      if (!p_text.empty()) p = Scalar::parse(p_text);
      auto report = theorem_probe(graph, graphon, p, tol, options);
      if (report.verdict == Verdict::ConstantGraphon) {
        const auto chain = lemma_chain_replay(graph, graphon, p, tol, options);
        report.checks.insert(report.checks.end(), chain.checks.begin(), chain.checks.end());
        report.contradiction = report.contradiction || chain.contradiction;
      }
      std::cout << io::format_report(report) << '\n';
      if (report.contradiction) return kContradiction;
      switch (report.verdict) {
        case Verdict::NonbinomialEdgeCounts: return kNonbinomial;
        case Verdict::NoC4Precondition: return kNoC4;
        default: return kOk;
      }
    }

    if (sample->parsed()) {
      const auto graphon = io::parse_graphon(io::read_file(sample_graphon));
      std::cout << io::format_graph(sample_graph(sample_n, graphon, sample_seed));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "graphonlab: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kOk;
}
