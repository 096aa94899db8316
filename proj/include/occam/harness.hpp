#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "occam/core.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// Brute-force VC dimension

// d given the set of achievable labelings, each a bitmask over the domain
// (bit i = label of domain point i). Exhaustive subset + labeling check.
int vc_dim_from_labelings(const std::vector<std::uint32_t>& labelings,
                          int domain_size);

// Enumerates the system's concept class over the domain and shatters.
// Domain capped at 16 points; monomial classes only (other systems exceed
// the enumeration budget).
int vc_dim_bruteforce(SystemId system, int n,
                      const std::vector<Example>& domain);

// ---------------------------------------------------------------------------
// Experiment configuration

enum class BoundSource { Vc, Finite, Length, Kc };
const char* bound_source_name(BoundSource b);
BoundSource parse_bound_source(const std::string& text);

struct TargetSpec {
  enum class Kind { Explicit, Random };
  Kind kind = Kind::Random;
  std::string text;    // Explicit: parsed per the system's format
  int size = -1;       // Random monomials: literal count; -1 = unpinned
};

struct DistributionSpec {
  enum class Kind { UniformFull, UniformSupport, Explicit, PositivesNegatives };
  Kind kind = Kind::UniformFull;
  std::vector<Example> support;   // UniformSupport / Explicit
  std::vector<double> weights;    // Explicit
  std::size_t negatives = 0;      // PositivesNegatives; 0 = match positives
};

struct ExperimentConfig {
  SystemId system = SystemId::Monomial;
  std::string learner = "standard";  // standard | haussler | bruteforce | cheat
  BoundSource bound = BoundSource::Finite;
  int n = 0;
  double epsilon = 0.1;
  double delta = 0.1;
  int trials = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t sample_size = 0;  // 0 = derive from the bound source
  TargetSpec target;
  DistributionSpec distribution;
  CircuitEnvelope envelope;  // threshold targets/learners only
  int max_size = 1;          // bruteforce circuit gate cap
};

// Parses the JSON schema documented in docs/config.md.
ExperimentConfig parse_experiment_config(const std::string& json_text);

// ---------------------------------------------------------------------------
// PAC verification

struct TrialResult {
  int trial = 0;
  std::uint64_t m = 0;
  double error = 0.0;  // exact mass of the symmetric difference
  bool success = false;  // error <= epsilon
  std::int64_t witness_bits = -1;  // -1 when no codec applies
  double wall_ms = 0.0;
};

struct VerifyReport {
  double success_rate = 0.0;
  std::vector<TrialResult> trials;
};

// Runs config.trials independent trials: draw a target and distribution,
// resolve m from the bound source, feed m oracle examples to the learner,
// and measure the exact error. Deterministic given the config, including
// under --threads parallelism (trial i always uses streams derived from
// (seed, i) and results are ordered by trial index).
VerifyReport pac_verify(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Application experiments

struct App1Report {
  bool bound_only = true;
  double s = 0.0;
  int n = 0;
  double p_length = 0.0;  // description-length parameter, literal encoding
  double p_kc = 0.0;      // parameter from the witness-code group bound
  std::uint64_t m_length = 0;
  std::uint64_t m_kc = 0;
  double ratio = 0.0;  // m_length / m_kc
  // Desk-scale extras (bound_only = false):
  std::size_t windows = 0;           // substrings fed to the learner
  std::size_t distinct_windows = 0;  // after the learner's deduplication
  std::size_t hypothesis_length = 0;
  std::size_t groups = 0;
  std::size_t measured_bits = 0;
  std::size_t group_bound_bits = 0;  // groups * group_bits + 1
  std::size_t group_budget = 0;      // ceil(2 |hypothesis| / n)
  bool round_trip = false;
  bool literal_fallback = false;
};

// bound_only: evaluates both sample bounds from the description-length
// formulas alone (usable at genome scale). Desk mode (s <= 100000):
// samples overlapping windows of a random length-s DNA string, runs the
// greedy learner, and scores the witness code it induces.
App1Report application1_experiment(std::uint64_t s, int n, double epsilon,
                                   double delta, std::size_t num_samples,
                                   bool bound_only, std::uint64_t seed);

struct App2Report {
  int n = 0;
  int target_size = 0;  // literals in the target monomial
  std::size_t p_kc = 0;      // trit bits for the absent variables
  std::size_t p_length = 0;  // 2n bits, literal encoding
  std::uint64_t m_kc = 0;
  std::uint64_t m_length = 0;
  double ratio = 0.0;  // m_length / m_kc
  double success_rate = 0.0;
  int trials = 0;
  std::vector<TrialResult> trial_results;
};

// Conjunction-learning comparison: targets with the given literal count
// (default n - ceil(sqrt(n))), per-trial random targets, distribution =
// all positives plus matching random negatives, standard learner run at
// the witness-code sample bound.
App2Report application2_experiment(int n, int target_size, double epsilon,
                                   double delta, int trials,
                                   std::uint64_t seed, int threads = 1);

}  // namespace occam
