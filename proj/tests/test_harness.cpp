#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "occam/bounds.hpp"
#include "occam/coding.hpp"
#include "occam/core.hpp"
#include "occam/errors.hpp"
#include "occam/harness.hpp"

using namespace occam;

namespace {

bool same_trials(const std::vector<TrialResult>& a,
                 const std::vector<TrialResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].trial != b[i].trial || a[i].m != b[i].m ||
        a[i].error != b[i].error || a[i].success != b[i].success ||
        a[i].witness_bits != b[i].witness_bits)
      return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// VC dimension brute force

TEST_CASE("shattering over explicit labeling sets") {
  // One concept cannot shatter even a single point.
  CHECK(vc_dim_from_labelings({0b01}, 2) == 0);
  // All four labelings of two points.
  CHECK(vc_dim_from_labelings({0b00, 0b01, 0b10, 0b11}, 2) == 2);
  // Monotone labelings miss the 10 pattern.
  CHECK(vc_dim_from_labelings({0b00, 0b01, 0b11}, 2) == 1);
  CHECK(vc_dim_from_labelings({}, 3) == 0);
  CHECK_THROWS_AS(vc_dim_from_labelings({0b1}, 17), InfeasibleError);
}

TEST_CASE("conjunction class dimension at small n") {
  // n = 1 shatters both points: true, x1, !x1, and always-false are all
  // realizable labelings of {0, 1}.
  CHECK(vc_dim_bruteforce(SystemId::Monomial, 1,
                          full_domain(Alphabet::Binary, 1)) == 2);
  CHECK(vc_dim_bruteforce(SystemId::Monomial, 2,
                          full_domain(Alphabet::Binary, 2)) == 2);
  CHECK(vc_dim_bruteforce(SystemId::Monomial, 3,
                          full_domain(Alphabet::Binary, 3)) == 3);
  CHECK(vc_dim_bruteforce(SystemId::Monomial, 2, {"00", "11"}) == 2);
  CHECK_THROWS_AS(vc_dim_bruteforce(SystemId::Threshold, 2,
                                    full_domain(Alphabet::Binary, 2)),
                  InfeasibleError);
  CHECK_THROWS_AS(vc_dim_bruteforce(SystemId::Monomial, 11, {"0", "1"}),
                  InfeasibleError);
}

// ---------------------------------------------------------------------------
// Configuration parsing

TEST_CASE("experiment config defaults") {
  ExperimentConfig c = parse_experiment_config(R"({
    "system": "monomial", "learner": "standard", "n": 4,
    "epsilon": 0.1, "delta": 0.1, "trials": 3
  })");
  CHECK(c.system == SystemId::Monomial);
  CHECK(c.bound == BoundSource::Finite);
  CHECK(c.seed == 0);
  CHECK(c.threads == 1);
  CHECK(c.sample_size == 0);
  CHECK(c.target.kind == TargetSpec::Kind::Random);
  CHECK(c.target.size == -1);
  CHECK(c.distribution.kind == DistributionSpec::Kind::UniformFull);
  CHECK(c.envelope.n == 4);
  CHECK(c.max_size == 1);
}

TEST_CASE("experiment config full form") {
  ExperimentConfig c = parse_experiment_config(R"({
    "system": "threshold", "learner": "bruteforce", "bound": "finite",
    "n": 2, "epsilon": 0.2, "delta": 0.3, "trials": 7, "seed": 42,
    "threads": 4, "sample_size": 19, "max_size": 2,
    "target": {"kind": "random"},
    "distribution": {"kind": "explicit", "support": ["00", "11"],
                     "weights": [0.25, 0.75]},
    "envelope": {"n": 2, "max_gates": 2, "max_degree": 2,
                 "weight_min": -1, "weight_max": 1}
  })");
  CHECK(c.system == SystemId::Threshold);
  CHECK(c.learner == "bruteforce");
  CHECK(c.trials == 7);
  CHECK(c.seed == 42);
  CHECK(c.threads == 4);
  CHECK(c.sample_size == 19);
  CHECK(c.max_size == 2);
  CHECK(c.distribution.kind == DistributionSpec::Kind::Explicit);
  CHECK(c.distribution.support == std::vector<Example>{"00", "11"});
  CHECK(c.distribution.weights == std::vector<double>{0.25, 0.75});
  CHECK(c.envelope.max_gates == 2);
  CHECK(c.envelope.weight_min == -1);

  ExperimentConfig e = parse_experiment_config(R"({
    "system": "monomial", "learner": "standard", "n": 3,
    "epsilon": 0.1, "delta": 0.1, "trials": 1,
    "target": {"kind": "explicit", "text": "x1&!x2"}
  })");
  CHECK(e.target.kind == TargetSpec::Kind::Explicit);
  CHECK(e.target.text == "x1&!x2");
}

TEST_CASE("experiment config rejects malformed input") {
  CHECK_THROWS_AS(parse_experiment_config("{"), InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config("3"), InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"system": "monomial"})"),
                  InputFormatError);  // missing required fields
  auto with = [](const std::string& patch) {
    return std::string(R"({"system": "monomial", "learner": "standard",
                           "n": 4, "epsilon": 0.1, "delta": 0.1,
                           "trials": 1)") +
           patch + "}";
  };
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "trials": 0)")),
                  InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "epsilon": 1.0)")),
                  InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "n": 0)")),
                  InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "threads": 0)")),
                  InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "bound": "magic")")),
                  InputFormatError);
  CHECK_THROWS_AS(
      parse_experiment_config(with(R"(, "target": {"kind": "psychic"})")),
      InputFormatError);
  CHECK_THROWS_AS(
      parse_experiment_config(with(R"(, "distribution": {"kind": "odd"})")),
      InputFormatError);
  CHECK_THROWS_AS(parse_experiment_config(with(R"(, "system": "widget")")),
                  InputFormatError);
}

// ---------------------------------------------------------------------------
// pac_verify

TEST_CASE("cheat learner always succeeds with a zero-bit error") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "cheat";
  c.n = 5;
  c.epsilon = 0.1;
  c.delta = 0.1;
  c.trials = 8;
  c.seed = 3;
  c.sample_size = 1;
  VerifyReport r = pac_verify(c);
  CHECK(r.success_rate == 1.0);
  REQUIRE(r.trials.size() == 8);
  for (const auto& t : r.trials) {
    CHECK(t.m == 1);
    CHECK(t.error == 0.0);
    CHECK(t.success);
    CHECK(t.witness_bits >= 0);  // hypothesis equals the target
  }
}

TEST_CASE("bound sources resolve to the frozen sample sizes") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "standard";
  c.n = 5;
  c.epsilon = 0.2;
  c.delta = 0.2;
  c.trials = 1;

  c.bound = BoundSource::Finite;
  CHECK(pac_verify(c).trials[0].m == 36);  // ceil(5 ln(244/0.2))

  c.bound = BoundSource::Vc;
  CHECK(pac_verify(c).trials[0].m == vc_upper_bound(5, 0.2, 0.2));
  c.n = 1;
  CHECK(pac_verify(c).trials[0].m == vc_upper_bound(2, 0.2, 0.2));

  c.n = 4;
  c.epsilon = 0.1;
  c.delta = 0.1;
  c.target.kind = TargetSpec::Kind::Explicit;
  c.target.text = "x1&x2";
  c.bound = BoundSource::Kc;  // p = 4 trit bits over two free variables
  CHECK(pac_verify(c).trials[0].m == 56);
  c.bound = BoundSource::Length;  // p = 2n = 8 literal bits
  CHECK(pac_verify(c).trials[0].m == 111);
}

TEST_CASE("standard learner meets the finite-class guarantee empirically") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "standard";
  c.bound = BoundSource::Finite;
  c.n = 5;
  c.epsilon = 0.2;
  c.delta = 0.2;
  c.trials = 200;
  c.seed = 17;
  VerifyReport r = pac_verify(c);
  // Per-trial guarantee is >= 1 - delta = 0.8; allow binomial noise.
  CHECK(r.success_rate >= 0.75);
}

TEST_CASE("a single example is not enough at tight accuracy") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "standard";
  c.n = 5;
  c.epsilon = 0.05;
  c.delta = 0.1;
  c.trials = 200;
  c.seed = 29;
  c.sample_size = 1;
  VerifyReport r = pac_verify(c);
  CHECK(r.success_rate < 0.5);
}

TEST_CASE("pac_verify is reproducible, including across thread counts") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "standard";
  c.bound = BoundSource::Finite;
  c.n = 5;
  c.epsilon = 0.2;
  c.delta = 0.2;
  c.trials = 40;
  c.seed = 123;
  VerifyReport serial = pac_verify(c);
  VerifyReport again = pac_verify(c);
  CHECK(same_trials(serial.trials, again.trials));
  c.threads = 4;
  VerifyReport parallel = pac_verify(c);
  CHECK(same_trials(serial.trials, parallel.trials));
  CHECK(serial.success_rate == parallel.success_rate);
}

TEST_CASE("set-cover learner runs under pac_verify") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "haussler";
  c.bound = BoundSource::Finite;
  c.n = 4;
  c.epsilon = 0.2;
  c.delta = 0.2;
  c.trials = 10;
  c.seed = 31;
  VerifyReport r = pac_verify(c);
  CHECK(r.trials.size() == 10);
  CHECK(r.success_rate >= 0.0);
  CHECK(r.success_rate <= 1.0);
}

TEST_CASE("brute-force circuit learner runs under pac_verify") {
  ExperimentConfig c;
  c.system = SystemId::Threshold;
  c.learner = "bruteforce";
  c.bound = BoundSource::Finite;
  c.n = 2;
  c.epsilon = 0.2;
  c.delta = 0.2;
  c.trials = 5;
  c.seed = 37;
  c.envelope = CircuitEnvelope{2, 1, 3, -2, 2};
  c.max_size = 1;
  VerifyReport r = pac_verify(c);
  std::uint64_t expected_m = finite_class_bound(
      double(circuit_class_size(c.envelope)), 0.2, 0.2);
  for (const auto& t : r.trials) {
    CHECK(t.m == expected_m);
    CHECK(t.witness_bits == -1);  // no conditional codec for circuits
  }
}

TEST_CASE("positives-negatives distributions are materialized") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "standard";
  c.n = 4;
  c.epsilon = 0.1;
  c.delta = 0.1;
  c.trials = 6;
  c.seed = 41;
  c.sample_size = 30;
  c.target.size = 2;
  c.distribution.kind = DistributionSpec::Kind::PositivesNegatives;
  VerifyReport r = pac_verify(c);
  REQUIRE(r.trials.size() == 6);
  for (const auto& t : r.trials) {
    CHECK(t.m == 30);
    CHECK(t.error >= 0.0);
    CHECK(t.error <= 1.0);
  }
  CHECK(r.success_rate > 0.5);  // half the mass is positive; coverage is easy
}

TEST_CASE("unknown learners are a configuration error") {
  ExperimentConfig c;
  c.system = SystemId::Monomial;
  c.learner = "psychic";
  c.n = 3;
  c.trials = 1;
  c.sample_size = 1;
  CHECK_THROWS_AS(pac_verify(c), InputFormatError);
}

// ---------------------------------------------------------------------------
// Application 1

TEST_CASE("application 1 bound-only headline ratio") {
  App1Report r = application1_experiment(3000000000ULL, 500, 0.1, 0.1, 0,
                                         true, 0);
  CHECK(r.bound_only);
  CHECK(r.p_length == doctest::Approx(1.2e10));
  CHECK(r.p_kc == doctest::Approx(1.2e10 * 73.0 / 500.0));
  CHECK(r.ratio == doctest::Approx(500.0 / 73.0).epsilon(1e-6));
  CHECK(r.ratio >= 6.5);
  CHECK(r.ratio <= 7.5);
  CHECK(r.windows == 0);  // bound-only mode runs no learner
}

TEST_CASE("application 1 fixed point where both parameters coincide") {
  // At s = 1024, n = 25 the per-group cost 2*10 + 5 equals n, so the
  // group-based parameter collapses onto the literal one.
  App1Report r = application1_experiment(1024, 25, 0.1, 0.1, 0, true, 0);
  CHECK(r.p_kc == doctest::Approx(r.p_length));
  CHECK(r.m_kc == r.m_length);
  CHECK(r.ratio == doctest::Approx(1.0));
}

TEST_CASE("application 1 desk mode with a coverage walk") {
  App1Report r = application1_experiment(20000, 200, 0.1, 0.1, 0, false, 5);
  CHECK_FALSE(r.bound_only);
  CHECK(r.windows > 0);
  CHECK(r.distinct_windows <= r.windows);
  CHECK(r.hypothesis_length >= 200);
  CHECK(r.hypothesis_length <= 4 * 20000);
  CHECK(r.round_trip);
  CHECK(r.groups <= r.group_budget);
  if (r.literal_fallback)
    CHECK(r.measured_bits == 1 + 2 * r.hypothesis_length);
  else
    CHECK(r.measured_bits == r.group_bound_bits);
  CHECK(r.m_kc < r.m_length);
  CHECK(r.ratio > 1.0);
}

TEST_CASE("application 1 desk mode with uniform window sampling") {
  App1Report r = application1_experiment(400, 16, 0.1, 0.1, 300, false, 2);
  CHECK(r.windows == 300);
  CHECK(r.round_trip);
  if (r.literal_fallback)
    CHECK(r.measured_bits == 1 + 2 * r.hypothesis_length);
  else
    CHECK(r.measured_bits == r.group_bound_bits);
}

TEST_CASE("application 1 validates its parameters") {
  CHECK_THROWS_AS(application1_experiment(100, 1, 0.1, 0.1, 0, true, 0),
                  InputFormatError);
  CHECK_THROWS_AS(application1_experiment(10, 20, 0.1, 0.1, 0, true, 0),
                  InputFormatError);
  CHECK_THROWS_AS(application1_experiment(100, 10, 0.0, 0.1, 0, true, 0),
                  InputFormatError);
  CHECK_THROWS_AS(
      application1_experiment(200000, 100, 0.1, 0.1, 0, false, 0),
      InfeasibleError);
}

// ---------------------------------------------------------------------------
// Application 2

TEST_CASE("application 2 frozen bounds at n = 16") {
  App2Report r = application2_experiment(16, -1, 0.1, 0.1, 40, 11, 2);
  CHECK(r.target_size == 12);  // n - ceil(sqrt(n))
  CHECK(r.p_kc == 7);          // ceil(4 log2 3)
  CHECK(r.p_length == 32);
  CHECK(r.m_kc == 98);
  CHECK(r.m_length == 444);
  CHECK(r.ratio == doctest::Approx(444.0 / 98.0));
  CHECK(r.trials == 40);
  REQUIRE(r.trial_results.size() == 40);
  for (const auto& t : r.trial_results) CHECK(t.m == 98);
  CHECK(r.success_rate >= 0.95);
}

TEST_CASE("application 2 rejects out-of-range shapes") {
  CHECK_THROWS_AS(application2_experiment(65, -1, 0.1, 0.1, 1, 0, 1),
                  InputFormatError);
  CHECK_THROWS_AS(application2_experiment(16, 17, 0.1, 0.1, 1, 0, 1),
                  InputFormatError);
  // A target with no literals accepts everything; no negatives exist.
  CHECK_THROWS_AS(application2_experiment(4, 0, 0.1, 0.1, 1, 0, 1),
                  InfeasibleError);
}
