#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "gaussweb/poly.hpp"

namespace gaussweb {

struct RunConfig {
  std::string out;  // output path; empty means stdout
  int n = 0;
  double trace_tol = 1e-8;
  double merge_tol = 1e-4;
  std::uint64_t seed = 1;
  int samples = 50;
  int workers = 1;
  bool render = false;
  bool oracle = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitOracle = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitUsage = 64;

int exit_code(ErrorKind kind) noexcept;

/// GAUSSWEB_WORKERS if set and positive, otherwise 1.
int default_workers();

/// Runs fn(i) for i in [0, count) on `workers` threads.
template <class Fn>
void parallel_for(int count, int workers, Fn&& fn);

int cmd_diagram(const std::string& polynomial, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_equivariance(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mgt(int q_min, int q_max, const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// File mode when random_count == 0, otherwise a batch of random free actions.
int cmd_orbitgrpd(const std::string& graph_path, const std::string& action_path, int random_count, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err);
int cmd_chambers(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pentagon(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gaussweb

#include <atomic>
#include <thread>
#include <vector>

namespace gaussweb {

template <class Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gaussweb
