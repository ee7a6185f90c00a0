#include <CLI11.hpp>
#include <iostream>

#include "gaussweb/commands.hpp"

using namespace gaussweb;

int main(int argc, char** argv) {
  CLI::App app{"gaussweb: harmonic webs, chord diagrams and their symmetries"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = default_workers();
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--workers", cfg.workers, "worker threads (default from GAUSSWEB_WORKERS)")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file");
  };
  auto tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol-trace", cfg.trace_tol, "tracing residual tolerance");
    sub->add_option("--tol-merge", cfg.merge_tol, "node merge radius relative to R");
  };

  std::string polynomial;
  auto* diagram = app.add_subcommand("diagram", "trace a polynomial and write its chord diagram as JSON");
  diagram->add_option("polynomial", polynomial, "e.g. \"z^2-1\" or \"z^3 - (1+2i)z + 0.5\"")->required();
  diagram->add_flag("--render", cfg.render, "also write an SVG figure next to --out");
  diagram->add_flag("--oracle", cfg.oracle, "cross-check against the sign-grid oracle");
  common(diagram);
  tolerances(diagram);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate generic diagrams of degree n");
  enumerate->add_option("--n", cfg.n, "degree (1..6)")->required();
  common(enumerate);

  auto* equivariance = app.add_subcommand("equivariance", "check dihedral equivariance on random polynomials");
  equivariance->add_option("--n", cfg.n, "degree")->required();
  equivariance->add_option("--samples", cfg.samples, "number of random polynomials");
  common(equivariance);
  tolerances(equivariance);

  int q_min = 2, q_max = 20;
  auto* mgt = app.add_subcommand("mgt", "tabulate the groups mGT_q");
  mgt->add_option("--q-min", q_min, "smallest modulus");
  mgt->add_option("--q-max", q_max, "largest modulus (<= 200)");
  common(mgt);

  std::string graph_path, action_path;
  int random_count = 0;
  auto* orbitgrpd = app.add_subcommand("orbitgrpd", "orbit groupoid check for a group acting on a graph");
  orbitgrpd->add_option("--graph", graph_path, "edge list file, 'u v' per line");
  orbitgrpd->add_option("--action", action_path, "generator permutations, one per line");
  orbitgrpd->add_option("--random", random_count, "check this many random free actions instead");
  common(orbitgrpd);

  auto* chambers = app.add_subcommand("chambers", "chamber decomposition of the diagram set");
  chambers->add_option("--n", cfg.n, "degree (1..6)")->required();
  chambers->add_option("--samples", cfg.samples, "path-lifting walks");
  common(chambers);

  auto* pentagon = app.add_subcommand("pentagon", "reassociation graph on four letters");
  common(pentagon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (diagram->parsed()) return cmd_diagram(polynomial, cfg, std::cout, std::cerr);
  if (enumerate->parsed()) return cmd_enumerate(cfg, std::cout, std::cerr);
  if (equivariance->parsed()) return cmd_equivariance(cfg, std::cout, std::cerr);
  if (mgt->parsed()) return cmd_mgt(q_min, q_max, cfg, std::cout, std::cerr);
  if (orbitgrpd->parsed()) return cmd_orbitgrpd(graph_path, action_path, random_count, cfg, std::cout, std::cerr);
  if (chambers->parsed()) return cmd_chambers(cfg, std::cout, std::cerr);
  if (pentagon->parsed()) return cmd_pentagon(cfg, std::cout, std::cerr);
  return kExitUsage;
}
