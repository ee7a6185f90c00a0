// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "gaussweb/chambers.hpp"
#include "gaussweb/commands.hpp"
#include "gaussweb/dihedral.hpp"
#include "gaussweb/mgt.hpp"
#include "gaussweb/orbitgrpd.hpp"
#include "gaussweb/strata.hpp"
#include "support.hpp"

using namespace gaussweb;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int workers() {
  const int env = default_workers();
  if (env > 1) return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t corpus_seed(int n, int i) { return 1'000'003ULL * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i); }

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// (2m choose m) / (m + 1) through exact products.
long long catalan_binomial(int m) {
  long long c = 1;
  for (int k = 0; k < m; ++k) c = c * (2 * m - k) / (k + 1);  // stays integral at every step
  return c / (m + 1);
}

Verdict criterion1() {
  Verdict v{true, ""};
  for (int m = 1; m <= 10; ++m) {
    const long long got = static_cast<long long>(noncrossing_matchings(m).size());
    if (got != catalan_binomial(m)) {
      v.pass = false;
      v.detail += " m=" + std::to_string(m) + " got " + std::to_string(got);
    }
  }
  if (v.pass) v.detail = "m=1..10 match (2m choose m)/(m+1)";
  return v;
}

Verdict criterion2() {
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> status(100, 0);  // 0 valid, 1 trace failure, 2 violation
    std::vector<std::string> why(100);
    parallel_for(100, workers(), [&](int i) {
      try {
        const ChordDiagram d = web_to_diagram(extract_web(random_polynomial(n, corpus_seed(n, i))));
        why[i] = testing::diagram_violation(d);
        if (why[i].empty()) {
          try {
            validate(d);
          } catch (const Error& e) {
            why[i] = e.what();
          }
        }
        status[i] = why[i].empty() ? 0 : 2;
      } catch (const Error&) {
        status[i] = 1;
      }
    });
    const int failures = static_cast<int>(std::count(status.begin(), status.end(), 1));
    const int violations = static_cast<int>(std::count(status.begin(), status.end(), 2));
    detail += " n=" + std::to_string(n) + ":" + std::to_string(100 - failures - violations) + "/" +
              std::to_string(100 - failures) + " ok, " + std::to_string(failures) + "% trace failures;";
    if (violations > 0 || failures >= 5) pass = false;
    for (int i = 0; i < 100; ++i) {
      if (status[i] == 2) detail += " [seed " + std::to_string(corpus_seed(n, i)) + ": " + why[i] + "]";
    }
  }
  return {pass, detail};
}

Verdict criterion3() {
  std::string detail;
  bool pass = true;
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> status(100, 0);  // 0 agree, 1 trace failure, 2 disagree
    parallel_for(100, workers(), [&](int i) {
      const MonicPolynomial p = random_polynomial(n, corpus_seed(n, i));
      try {
        const CanonicalCode a = canonical_form(web_to_diagram(extract_web(p)));
        const CanonicalCode b = canonical_form(web_to_diagram(sign_grid_oracle(p, 512)));
        status[i] = a == b ? 0 : 2;
      } catch (const Error&) {
        status[i] = 1;
      }
    });
    const int failures = static_cast<int>(std::count(status.begin(), status.end(), 1));
    const int disagree = static_cast<int>(std::count(status.begin(), status.end(), 2));
    detail += " n=" + std::to_string(n) + ":" + std::to_string(100 - failures - disagree) + "/" + std::to_string(100 - failures);
    if (failures) detail += " (" + std::to_string(failures) + " untraced)";
    detail += ";";
    if (disagree > 0) pass = false;
  }
  return {pass, detail};
}

Verdict criterion4() {
  std::string detail;
  bool pass = true;
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> status(50, 0);
    parallel_for(50, workers(), [&](int i) {
      const MonicPolynomial p = random_polynomial(n, corpus_seed(n, i));
      try {
        const bool ok = check_equivariance(p, DihedralElement::s(n)) && check_equivariance(p, DihedralElement::t(n));
        status[i] = ok ? 0 : 2;
      } catch (const Error&) {
        status[i] = 1;
      }
    });
    const int failures = static_cast<int>(std::count(status.begin(), status.end(), 1));
    const int broken = static_cast<int>(std::count(status.begin(), status.end(), 2));
    const GroupOrderReport order = measured_group_order(n);
    detail += " n=" + std::to_string(n) + ":" + std::to_string(50 - failures - broken) + "/" + std::to_string(50 - failures) +
              " order " + std::to_string(order.measured) + " vs nominal " + std::to_string(order.nominal) +
              (order.mismatch ? " MISMATCH" : "") + ";";
    if (broken > 0 || failures == 50) pass = false;
    // the discrepancy must be reported, never hidden
    if (order.mismatch != (order.measured != order.nominal)) pass = false;
  }
  return {pass, detail};
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Verdict criterion5() {
  std::string detail;
  bool pass = true;
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    const CanonicalCode expected = canonical_form(real_locus_diagram(n));
    int ok = 0;
    for (int i = 0; i < 20; ++i) {
      const MonicPolynomial p = random_real_rooted_polynomial(n, corpus_seed(n, i));
      bool good = true;
      try {
        const ChordDiagram d = web_to_diagram(extract_web(p));
        const CanonicalCode code = canonical_form(d);
        good = code == expected && canonical_form(act_on_diagram(DihedralElement::t(n), d)) == code;
      } catch (const Error&) {
        good = false;
      }
      // roots and critical points by sign changes on the real line
      auto real_p = [&](double x) { return p(Complex{x, 0}).real(); };
      auto real_dp = [&](double x) { return p.derivative_at(Complex{x, 0}).real(); };
      const double r = cauchy_radius(p);
      std::vector<double> rts;
      const int steps = 200000;
      for (int k = 0; k < steps; ++k) {
        const double a = -r + 2 * r * k / steps, b = -r + 2 * r * (k + 1) / steps;
        if ((real_p(a) < 0) != (real_p(b) < 0)) rts.push_back(bisect(real_p, a, b));
      }
      if (static_cast<int>(rts.size()) != n) good = false;
      std::vector<double> crit_oracle;
      for (std::size_t k = 0; k + 1 < rts.size(); ++k) crit_oracle.push_back(bisect(real_dp, rts[k], rts[k + 1]));
      std::vector<double> crit;
      for (const Complex c : critical_points(p)) {
        if (std::abs(c.imag()) > 1e-8) good = false;
        crit.push_back(c.real());
      }
      std::sort(crit.begin(), crit.end());
      if (crit.size() != crit_oracle.size()) good = false;
      for (std::size_t k = 0; good && k < crit.size(); ++k) {
        worst = std::max(worst, std::abs(crit[k] - crit_oracle[k]));
        if (std::abs(crit[k] - crit_oracle[k]) > 1e-8 || !(rts[k] < crit[k] && crit[k] < rts[k + 1])) good = false;
      }
      ok += good;
    }
    detail += " n=" + std::to_string(n) + ":" + std::to_string(ok) + "/20;";
    if (ok != 20) pass = false;
  }
  detail += fmt(" worst critical-point deviation %.1e", worst);
  return {pass, detail};
}

Verdict criterion6() {
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    const ChamberDecomposition dec = chamber_decomposition(n, chamber_diagram_set(n));
    const CanonicalCode real = canonical_form(real_locus_diagram(n));
    int holders = 0;
    for (const Chamber& c : dec.chambers) holders += std::binary_search(c.members.begin(), c.members.end(), real);
    const bool trivial = dec.domain_stabilizer.size() == 1;
    const bool ok = dec.partition && dec.transitive && trivial && holders == 1;
    detail += " n=" + std::to_string(n) + ":" + (ok ? "ok" : "FAIL") + " (" + std::to_string(dec.chambers.size()) +
              " chambers, |G|=" + std::to_string(dec.group_order) + ", stabilizer";
    for (const auto& g : dec.domain_stabilizer) detail += " " + g.to_string();
    detail += ", partition " + std::string(dec.partition ? "yes" : "no") + ", transitive " +
              (dec.transitive ? "yes" : "no") + ", real-locus holders " + std::to_string(holders) + ");";
    if (!ok) pass = false;
  }
  return {pass, detail};
}

Verdict criterion7() {
  const PentagonReport r = pentagon_report();
  std::vector<int> degree(r.vertices, 0);
  for (const auto& [a, b] : r.edge_list) {
    ++degree[a];
    ++degree[b];
  }
  const bool two_regular = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
  const bool pass = r.vertices == 5 && r.edges == 5 && r.is_cycle && two_regular;
  return {pass, " vertices " + std::to_string(r.vertices) + " edges " + std::to_string(r.edges) + " cycle " +
                    (r.is_cycle ? "yes" : "no")};
}

Verdict criterion8() {
  std::vector<ActionInstance> all{hexagon_example(), triangles_example()};
  for (std::uint64_t s = 0; s < 50; ++s) all.push_back(random_free_action(s, 6, 30));
  int passed = 0;
  std::string detail;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const ActionInstance& inst = all[i];
    bool ok = inst.action.order() <= 6 && inst.graph.vertex_count <= 30;
    try {
      const OrbitGroupoidReport r = orbit_groupoid_report(inst.graph, inst.action, inst.base);
      ok = ok && r.passed && r.quotient_rank == testing::gf2_quotient_rank(inst.graph, inst.action) &&
           r.groupoid_rank == r.quotient_rank && r.cover_rank == testing::gf2_cycle_rank(inst.graph);
    } catch (const Error& e) {
      ok = false;
      detail += std::string(" [") + e.what() + "]";
    }
    passed += ok;
  }
  return {passed == static_cast<int>(all.size()),
          " " + std::to_string(passed) + "/" + std::to_string(all.size()) + " (2 hand examples, 50 random)" + detail};
}

Verdict criterion9() {
  bool pass = true;
  std::string detail;
  for (int q = 2; q <= 50; ++q) {
    const MgtRow row = mgt_row(q);
    int phi = 0;
    for (int a = 1; a <= q; ++a) phi += std::gcd(a, q) == 1;
    const bool ok = row.order == q * phi && row.all_affine && (q < 3 || (row.dihedral_ok && row.dihedral_order == 2 * q));
    if (!ok) {
      pass = false;
      detail += " q=" + std::to_string(q) + " fails;";
    }
  }
  int chains = 0;
  for (int q = 2; q <= 24; ++q) {
    const MgtGroup g = mgt_group(q);
    for (int p = 1; p <= q; ++p) {
      if (q % p != 0) continue;
      if (!tower_is_homomorphism(g, p)) {
        pass = false;
        detail += " u_" + std::to_string(q) + "," + std::to_string(p) + " not a homomorphism;";
      }
      for (int r = 1; r <= p; ++r) {
        if (p % r != 0) continue;
        ++chains;
        if (!tower_compatibility(q, p, r)) {
          pass = false;
          detail += " chain " + std::to_string(q) + ">" + std::to_string(p) + ">" + std::to_string(r) + " fails;";
        }
      }
    }
  }
  return {pass, " orders and dihedral subgroups q=2..50, " + std::to_string(chains) + " chains q<=24" + detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Verdict criterion10() {
  const fs::path dir = fs::temp_directory_path() / ("gaussweb_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string data = GAUSSWEB_TEST_DATA;
  const std::vector<std::string> commands{
      "diagram \"z^3-(0.2+0.1i)z+0.4\" --render --out @/d.json",
      "diagram \"z^2-1\" --oracle",
      "enumerate --n 3 --out @/e.json",
      "enumerate --n 4",
      "equivariance --n 3 --samples 20 --seed 7",
      "mgt --q-min 2 --q-max 40 --out @/m.tsv",
      "orbitgrpd --graph " + data + "/c6.graph --action " + data + "/c6_z3.action",
      "orbitgrpd --random 20 --seed 11",
      "chambers --n 3 --samples 20 --seed 5",
      "pentagon",
  };
  bool pass = true;
  std::string detail;
  for (const std::string& args : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path rundir = dir / std::to_string(run);
      fs::create_directories(rundir);
      std::string expanded = args;
      for (std::size_t at; (at = expanded.find('@')) != std::string::npos;) expanded.replace(at, 1, rundir.string());
      const std::string cmd = std::string("\"") + GAUSSWEB_CLI + "\" " + expanded + " > \"" + (rundir / "stdout").string() + "\" 2>&1";
      const int status = std::system(cmd.c_str());
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      std::string all = "exit " + std::to_string(code) + "\n";
      for (const auto& entry : fs::directory_iterator(rundir)) {
        std::string text = slurp(entry.path());
        // output paths differ between runs by construction
        for (std::size_t at; (at = text.find(rundir.string())) != std::string::npos;) text.replace(at, rundir.string().size(), "@");
        all += entry.path().filename().string() + "\n" + text;
      }
      outputs[run] = all;
      fs::remove_all(rundir);
    }
    if (outputs[0] != outputs[1]) {
      pass = false;
      detail += " differs: " + args + ";";
    }
  }
  fs::remove_all(dir);
  return {pass, " " + std::to_string(commands.size()) + " commands run twice" + detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"Catalan counts", 5, criterion1},
      {"diagram invariants", 120, criterion2},
      {"oracle equivalence", 300, criterion3},
      {"dihedral equivariance", 300, criterion4},
      {"real-locus stability", 60, criterion5},
      {"chambers", 60, criterion6},
      {"pentagon", 1, criterion7},
      {"orbit groupoids", 10, criterion8},
      {"mGT tower", 30, criterion9},
      {"determinism", 600, criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].run();
    } catch (const std::exception& e) {
      v = {false, std::string(" exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < criteria[k].budget_s;
    const bool ok = v.pass && in_time;
    failed += !ok;
    std::cout << "criterion " << (k + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[k].name << " |" << v.detail
              << fmt(" | %.2fs of %.0fs", secs, criteria[k].budget_s) << (in_time ? "" : " OVER BUDGET") << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
