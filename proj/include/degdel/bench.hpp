// Benchmark harness: generate instances from a suite description, run the
// selected solvers and record their work counters.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace degdel {

struct bench_group {
  std::string generator;  // feedback_budget | random_ud | random_dir | forest
  std::vector<int> n, m, s_e;
  std::vector<int> k{2}, d{2};
  int repeat = 1;
  std::vector<std::string> solvers;  // mdd_search mdd_solv_dp mdd_solv_ilp oracle_mdd bdd oracle_bdd mid oracle_mid
};

struct bench_suite {
  std::string name;
  std::uint64_t seed = 1;
  std::vector<bench_group> groups;
};

struct bench_record {
  std::string instance;
  std::string solver;
  int n = 0, m = 0, k = 0, d = 0;
  int s_e = -1, s_v = -1;  // -1 when not computed
  std::string decision;    // YES, NO or SKIP
  std::uint64_t explored = 0;
  std::uint64_t micros = 0;
  bool operator==(const bench_record&) const = default;
};

// Suite JSON: {"name": ..., "seed": ..., "groups": [{"generator": ...,
// "n": [...], "m": [...], "s_e": [...], "k": [...], "d": [...], "repeat": r,
// "solvers": [...]}]}. Scalars are accepted where lists are expected.
bench_suite parse_suite(const std::string& json_text);
// "counters" (the bound checks) or "smoke".
bench_suite builtin_suite(const std::string& name);

std::vector<bench_record> run_bench(const bench_suite& suite);

extern const char* const bench_csv_header;
std::string to_csv_row(const bench_record& r);
bench_record parse_csv_row(const std::string& line);

}  // namespace degdel
