#include "gaussweb/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "gaussweb/chambers.hpp"
#include "gaussweb/dihedral.hpp"
#include "gaussweb/mgt.hpp"
#include "gaussweb/orbitgrpd.hpp"
#include "gaussweb/render.hpp"
#include "gaussweb/strata.hpp"

namespace gaussweb {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Usage, "cannot write " + path);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Usage, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TraceParams params_of(const RunConfig& cfg) {
  if (!(cfg.trace_tol > 0) || !(cfg.merge_tol > 0)) throw Error(ErrorKind::Usage, "tolerances must be positive");
  TraceParams p;
  p.trace_tol = cfg.trace_tol;
  p.merge_tol_rel = cfg.merge_tol;
  return p;
}

std::string svg_path(const std::string& out) {
  if (out.empty()) return "diagram.svg";
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".svg";
  return out + ".svg";
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Numeric:
    case ErrorKind::NonGeneric:
      return kExitNumeric;
    case ErrorKind::OracleMismatch:
      return kExitOracle;
    case ErrorKind::Precondition:
      return kExitPrecondition;
    case ErrorKind::Usage:
      return kExitUsage;
    case ErrorKind::Invariant:
      return kExitInvariant;
  }
  return kExitInvariant;
}

int default_workers() {
  if (const char* env = std::getenv("GAUSSWEB_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

int cmd_diagram(const std::string& polynomial, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TraceParams params = params_of(cfg);
    const MonicPolynomial p = parse_polynomial(polynomial);
    const Web web = extract_web(p, params);
    ChordDiagram d = web_to_diagram(web);
    d.source_polynomial = format_polynomial_line(p);
    const CanonicalCode code = canonical_form(d);
    if (cfg.oracle) {
      const CanonicalCode other = canonical_form(web_to_diagram(sign_grid_oracle(p, 512, params)));
      if (other != code) {
        throw Error(ErrorKind::OracleMismatch, "oracle mismatch\n  trace:  " + code + "\n  oracle: " + other);
      }
    }
    const std::string json = to_json(d);
    if (cfg.out.empty()) {
      out << json << "\n";
    } else {
      write_file(cfg.out, json + "\n");
      out << "code " << code << "\n";
      out << "wrote " << cfg.out << "\n";
    }
    if (cfg.oracle) out << "oracle agrees\n";
    if (cfg.render) {
      write_file(svg_path(cfg.out), render_svg(web));
      if (!cfg.out.empty()) out << "wrote " << svg_path(cfg.out) << "\n";
    }
    return kExitOk;
  });
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.n < 1 || cfg.n > 6) throw Error(ErrorKind::Usage, "enumerate: --n must lie in 1..6");
    const auto matchings = noncrossing_matchings(cfg.n);
    const auto generic = enumerate_generic(cfg.n);
    out << "degree " << cfg.n << "\n";
    out << "single_color_count " << matchings.size() << " (catalan " << catalan(cfg.n) << ")\n";
    out << "generic_count " << generic.size() << "\n";
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const ChordDiagram& d : generic) {
      if (cfg.out.empty()) out << canonical_form(d) << "\n";
      else all.push_back(nlohmann::ordered_json::parse(to_json(d)));
    }
    if (!cfg.out.empty()) {
      write_file(cfg.out, all.dump(2) + "\n");
      out << "wrote " << cfg.out << "\n";
    }
    return kExitOk;
  });
}

int cmd_equivariance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int n = cfg.n;
    if (n < 1 || n > 8) throw Error(ErrorKind::Usage, "equivariance: --n must lie in 1..8");
    if (cfg.samples < 1) throw Error(ErrorKind::Usage, "equivariance: --samples must be positive");
    const TraceParams params = params_of(cfg);
    enum class Outcome { Pass, Fail, TraceFailure };
    std::vector<Outcome> outcome(cfg.samples);
    std::vector<std::string> detail(cfg.samples);
    parallel_for(cfg.samples, cfg.workers, [&](int i) {
      const MonicPolynomial p = random_polynomial(n, splitmix(cfg.seed + static_cast<std::uint64_t>(i)));
      try {
        bool ok = true;
        for (const auto& g : {DihedralElement::s(n), DihedralElement::t(n)}) {
          if (!check_equivariance(p, g, params)) {
            ok = false;
            detail[i] = "generator " + g.to_string() + " fails on " + format_polynomial_line(p);
          }
        }
        outcome[i] = ok ? Outcome::Pass : Outcome::Fail;
      } catch (const Error& e) {
        outcome[i] = Outcome::TraceFailure;
        detail[i] = std::string("trace failure: ") + e.what();
      }
    });
    int pass = 0, fail = 0, traced_failures = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      pass += outcome[i] == Outcome::Pass;
      fail += outcome[i] == Outcome::Fail;
      traced_failures += outcome[i] == Outcome::TraceFailure;
    }
    const GroupOrderReport order = measured_group_order(n);
    out << "degree " << n << " samples " << cfg.samples << " seed " << cfg.seed << "\n";
    out << "traced " << (pass + fail) << " trace_failures " << traced_failures << "\n";
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.1f", pass + fail == 0 ? 0.0 : 100.0 * pass / (pass + fail));
    out << "equivariance " << pass << "/" << (pass + fail) << " (" << rate << "%)\n";
    out << "group_order measured " << order.measured << " nominal " << order.nominal << " rotation_order "
        << order.rotation_order << (order.mismatch ? " MISMATCH" : "") << "\n";
    for (int i = 0; i < cfg.samples; ++i) {
      if (outcome[i] != Outcome::Pass) out << "sample " << i << ": " << detail[i] << "\n";
    }
    if (pass + fail == 0) return kExitNumeric;
    return fail == 0 ? kExitOk : kExitInvariant;
  });
}

int cmd_mgt(int q_min, int q_max, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (q_min < 2 || q_max > 200 || q_min > q_max) throw Error(ErrorKind::Usage, "mgt: need 2 <= q-min <= q-max <= 200");
    const int count = q_max - q_min + 1;
    std::vector<MgtRow> rows(count);
    std::vector<int> tower(count, -1);  // -1 not checked (q > 50)
    std::vector<std::string> tower_error(count);
    parallel_for(count, cfg.workers, [&](int i) {
      const int q = q_min + i;
      rows[i] = mgt_row(q);
      if (q > 50) return;
      const MgtGroup g = mgt_group(q);
      tower[i] = 1;
      for (int p = 1; p <= q; ++p) {
        if (q % p != 0) continue;
        try {
          check_tower_well_defined(g, p);
        } catch (const Error& e) {
          tower[i] = 0;
          tower_error[i] = e.what();
        }
        if (q <= 24 && !tower_is_homomorphism(g, p)) tower[i] = 0;
      }
    });
    out << format_mgt_table(rows);
    bool ok = true;
    for (int i = 0; i < count; ++i) {
      ok = ok && rows[i].ok() && tower[i] != 0;
      if (tower[i] == 0) out << "tower failure at q=" << rows[i].q << ": " << tower_error[i] << "\n";
    }
    out << "tower maps well defined for every divisor (q <= 50), homomorphic (q <= 24): "
        << (std::find(tower.begin(), tower.end(), 0) == tower.end() ? "yes" : "no") << "\n";
    if (!cfg.out.empty()) {
      write_file(cfg.out, format_mgt_tsv(rows));
      out << "wrote " << cfg.out << "\n";
    }
    return ok ? kExitOk : kExitInvariant;
  });
}

namespace {

std::vector<int> stable_base(const FiniteGraph& x, const GraphAction& act) {
  std::set<int> base;
  std::set<int> seen_components;
  const auto comp = x.component_of();
  for (int v = 0; v < x.vertex_count; ++v) {
    if (!seen_components.insert(comp[v]).second) continue;
    for (const auto& g : act.vertex_perm) base.insert(g[v]);
  }
  return {base.begin(), base.end()};
}

void describe(const FiniteGraph& x, const GraphAction& act, const OrbitGroupoidReport& r, std::ostream& out) {
  out << "graph vertices " << x.vertex_count << " edges " << x.edges.size() << " components " << x.component_count()
      << " rank " << r.cover_rank << "\n";
  out << "group order " << act.order() << "\n";
  out << "quotient rank " << r.quotient_rank << "\n";
  out << "orbit groupoid rank " << r.groupoid_rank << "\n";
  out << "euler multiplicative " << (r.euler_multiplicative ? "yes" : "no") << "\n";
  out << "projection surjective " << (r.surjective ? "yes" : "no") << "\n";
  out << "orbit_groupoid_check " << (r.passed ? "pass" : "FAIL") << "\n";
}

}  // namespace

int cmd_orbitgrpd(const std::string& graph_path, const std::string& action_path, int random_count, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (random_count > 0) {
      int passed = 0;
      for (int i = 0; i < random_count; ++i) {
        const ActionInstance inst = random_free_action(splitmix(cfg.seed + static_cast<std::uint64_t>(i)));
        const OrbitGroupoidReport r = orbit_groupoid_report(inst.graph, inst.action, inst.base);
        passed += r.passed;
        out << "instance " << i << " group " << inst.group_name << " vertices " << inst.graph.vertex_count << " edges "
            << inst.graph.edges.size() << " ranks " << r.quotient_rank << " " << r.groupoid_rank << " "
            << (r.passed ? "pass" : "FAIL") << "\n";
      }
      out << "passed " << passed << "/" << random_count << "\n";
      return passed == random_count ? kExitOk : kExitInvariant;
    }
    if (graph_path.empty() || action_path.empty()) throw Error(ErrorKind::Usage, "orbitgrpd: need --graph and --action, or --random");
    const FiniteGraph x = parse_graph(read_file(graph_path));
    const GraphAction act = parse_action(x, read_file(action_path));
    const ClubsuitReport club = check_clubsuit(x, act, cfg.seed);
    if (!act.is_free()) {
      out << club.to_string();
      throw Error(ErrorKind::Precondition, "action is not free: " + club.fixed_witness);
    }
    const OrbitGroupoidReport r = orbit_groupoid_report(x, act, stable_base(x, act));
    describe(x, act, r, out);
    out << club.to_string();
    return r.passed ? kExitOk : kExitInvariant;
  });
}

int cmd_chambers(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int n = cfg.n;
    if (n < 1 || n > 6) throw Error(ErrorKind::Usage, "chambers: --n must lie in 1..6");
    const ChamberDecomposition dec = chamber_decomposition(n, chamber_diagram_set(n));
    out << chamber_report(dec);
    const int fund = fundamental_chamber(dec);
    out << "fundamental_chamber " << fund << " label " << dec.chambers[fund].label.to_string() << "\n";
    const CanonicalCode real = dec.classes[dec.real_locus_class];
    const bool t_fixed = canonical_form(act_on_diagram(DihedralElement::t(n), real_locus_diagram(n))) == real;
    out << "real_locus_fixed_by_t " << (t_fixed ? "yes" : "no") << "\n";
    int antipode = -1;
    for (std::size_t c = 0; c < dec.chambers.size(); ++c) {
      for (const auto& h : dec.domain_stabilizer) {
        if (dec.chambers[c].label * h == DihedralElement(n, 2 * n, 0)) antipode = static_cast<int>(c);
      }
    }
    const Gallery g = gallery(dec, fund, antipode);
    out << "gallery to s^" << 2 * n << " length " << g.length() << " moves";
    for (const auto& m : g.moves) out << " " << m;
    out << "\n";
    const PathLiftingReport lift = check_path_lifting(dec, cfg.samples, 10, cfg.seed);
    out << "path_lifting " << lift.lifted << "/" << lift.samples << "\n";
    return dec.partition && dec.transitive && t_fixed && lift.all_lift ? kExitOk : kExitInvariant;
  });
}

int cmd_pentagon(const RunConfig&, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PentagonReport r = pentagon_report();
    out << "vertices " << r.vertices << "\n";
    for (std::size_t i = 0; i < r.vertex_words.size(); ++i) out << "  v" << i << " " << r.vertex_words[i] << "\n";
    out << "edges " << r.edges << "\n";
    for (std::size_t i = 0; i < r.edge_list.size(); ++i) {
      out << "  v" << r.edge_list[i].first << " -- v" << r.edge_list[i].second << "  " << r.edge_words[i] << "\n";
    }
    out << "cycle " << (r.is_cycle ? "yes" : "no") << "\n";
    out << "words_realized " << (r.words_realized ? "yes" : "no") << "\n";
    return r.vertices == 5 && r.edges == 5 && r.is_cycle && r.words_realized ? kExitOk : kExitInvariant;
  });
}

}  // namespace gaussweb
