#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadrics/pair.hpp"
#include "quadrics/quadric.hpp"

namespace quadrics {

/// One canonical representative per projective equivalence class of quadrics
/// in P^n: every (rank, type) with rank 1..n+1, id "r<rank>-<type>".
std::vector<std::pair<std::string, QuadraticForm>> enumerate_canonical_q1(int n, const Field& f);

enum class CensusMode { Exhaustive, Random };

struct CensusConfig {
  int n = 3;
  int p = 2;
  int m = 1;

  /// Q1 selection: an explicit coefficient vector, a rank/type filter, or
  /// (default) every canonical class.
  std::optional<std::vector<Fel>> q1_explicit;
  std::optional<int> rank_filter;
  std::optional<QuadricType> type_filter;

  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t sample_count = 0;  // per class, random mode
  std::uint64_t seed = 0;

  /// Q2 index ranges of this size form the unit of work, checkpointing and
  /// deterministic merging.
  std::uint64_t chunk_size = 4096;

  /// JSONL record stream destination; empty = summary only.
  std::string out_path;
  /// Continue a checkpointed run (requires out_path and the same config).
  bool resume = false;
  /// Stop after this many chunks (0 = run to completion); the checkpoint
  /// makes the remainder resumable.
  std::uint64_t max_chunks_this_run = 0;

  int threads = 1;
  /// Cap on (#Q2 forms) x pi_n, the evaluation work of an exhaustive sweep.
  std::uint64_t work_cap = 1'000'000'000;
  /// Diagnostic: sweep against this threshold instead of the sharp bound.
  /// In-hypothesis counts above it are treated as violations (abort with a
  /// reproducer), so a sweep with bound-1 lists the extremal configurations
  /// the hard way, and a deliberately low value exercises the abort path.
  std::optional<long long> bound_override;
  /// Witnesses kept per class in the summary.
  int witness_cap = 8;
};

struct CensusWitness {
  std::string q1_class;
  std::vector<Fel> q2;
  long long count = 0;
};

struct CensusClassSummary {
  std::string q1_class;
  std::uint64_t pairs_checked = 0;
  std::uint64_t in_hypothesis = 0;
  long long max_count = -1;  // over in-hypothesis pairs
  long long bound = 0;
  std::uint64_t extremal_count = 0;
  std::vector<CensusWitness> witnesses;
};

struct CensusSummary {
  CensusConfig config;
  long long bound = 0;
  long long max_count = -1;
  std::uint64_t pairs_checked = 0;
  std::uint64_t in_hypothesis = 0;
  std::uint64_t extremal_total = 0;
  bool violation = false;
  /// Minimal reproducers (forms, field, count) for any bound violation.
  std::vector<ordered_json> violations;
  std::vector<CensusClassSummary> classes;
  /// False when the run stopped early (violation or chunk budget).
  bool completed = false;
};

/// Sweeps Q2 over all nonzero coefficient vectors up to scalar (first
/// nonzero coefficient 1) against each selected Q1 class; verifies
/// count <= 4q^{n-2} + pi_{n-3} for every pair of distinct quadrics (as
/// varieties) with no common hyperplane.
/// Streams one JSONL record per pair to out_path; the stream is
/// byte-identical for a given config regardless of thread count. A bound
/// violation stops the sweep at the offending chunk (it indicates a bug)
/// and is reported with a reproducer.
CensusSummary run_census(const CensusConfig& config);

ordered_json census_summary_json(const CensusSummary& s);
std::string census_summary_csv(const CensusSummary& s);

struct ConeProbeClassReport {
  std::string q1_class;
  std::uint64_t q2_checked = 0;
  long long max_count_degenerate = -1;     // Q2 degenerate (the conjecture's hypothesis)
  long long max_count_nondegenerate = -1;  // informational
  std::vector<CensusWitness> counterexamples;  // degenerate Q2 exceeding the bound
};

struct ConeProbeReport {
  int n = 0;
  int r = 0;
  int p = 0;
  int m = 0;
  long long q = 0;
  long long bound = 0;  // EHmax(r-1, q) q^{n-r+1} + pi_{n-r}
  bool exhaustive = true;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<ConeProbeClassReport> classes;
  bool counterexample_found = false;
};

/// Probes the conjectured cone-pair bound for rank r >= 4: every rank-r
/// canonical Q1 against all (or sampled) Q2. Never asserts; a would-be
/// counterexample is surfaced in the report.
ConeProbeReport probe_cone_pair(int n, const Field& f, int r, std::uint64_t sample_count = 0,
                                std::uint64_t seed = 0,
                                std::uint64_t work_cap = 1'000'000'000);

ordered_json cone_probe_json(const ConeProbeReport& r);

}  // namespace quadrics
