#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "occam/coding.hpp"
#include "occam/core.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// Exception wrapping

// A representation together with an ordered exception list; the concept is
// c(base) with the membership of each listed example flipped.
struct ExceptionWrapped {
  Representation base;
  std::vector<Example> exceptions;

  bool accepts(const Example& x) const;
  // |base| plus one self-delimiting example per exception: growth is exactly
  // linear in the exception count.
  std::size_t length_bits() const;
};

// Flips membership of x: appends it as an exception, or removes it when
// already present. Validates x against the base system's alphabet and arity.
ExceptionWrapped exception_handle(ExceptionWrapped rep, const Example& x);

// ---------------------------------------------------------------------------
// Majority of three

ThresholdCircuit maj3_threshold(const ThresholdCircuit& r1,
                                const ThresholdCircuit& r2,
                                const ThresholdCircuit& r3);

// Expands (h1 and h2) or (h2 and h3) or (h3 and h1) into a DNF whose width is
// at most the sum of the two largest input widths (<= 2k for k-DNF inputs).
DnfFormula maj3_kdnf(const DnfFormula& h1, const DnfFormula& h2,
                     const DnfFormula& h3);

using Maj3Fn = std::function<Representation(
    const Representation&, const Representation&, const Representation&)>;

// ---------------------------------------------------------------------------
// Packaged PAC learners

// A deterministic learner bundled with its declared sample-complexity
// function m(n, s, epsilon, delta); the reductions consume m symbolically to
// choose epsilon_0 and the per-stage sample sizes.
struct PacLearner {
  std::string id;
  SystemId system = SystemId::Monomial;
  std::function<double(double n, double s, double epsilon, double delta)>
      sample_complexity;
  std::function<Representation(const std::vector<LabeledExample>&, int n)>
      learn;
};

// Deletion-based conjunction learner, m = ln((3^n+1)/delta) / epsilon.
PacLearner make_standard_monomial_learner();
// First consistent circuit in the envelope's enumeration order,
// m = ln(|envelope|/delta) / epsilon.
PacLearner make_bruteforce_threshold_learner(const CircuitEnvelope& envelope);

// ---------------------------------------------------------------------------
// Sample-to-description compression constructions

// Least epsilon in (0, 1] with m_of_epsilon(eps) = eps * m, by bracketed
// bisection to 1e-9 relative tolerance. Throws InfeasibleError when the
// curves do not intersect (m_of_epsilon(1) > m).
double solve_epsilon0(const std::function<double(double)>& m_of_epsilon,
                      std::uint64_t m);

struct Theorem2Result {
  ExceptionWrapped representation;
  WitnessCode witness;
  double epsilon0 = 0.0;
  std::uint64_t fed_count = 0;  // examples fed to the learner
  std::vector<Example> exceptions;
  double compression = 0.0;  // m / |witness bits|
  bool consistent = false;   // output agrees with the whole sample
  bool side_condition = false;  // m >= 2n * m(n, s, 1/(2n), gamma)
};

// Uniform distribution on the (distinct) sample; runs L once at the
// break-even accuracy epsilon_0 and repairs every residual error with the
// exception handler. The witness transcript holds the fed values and the
// exception values; a decoder with the labeling source replays L.
Theorem2Result theorem2_occam(const PacLearner& L, const LabeledSample& sample,
                              int n, double s, double gamma,
                              std::uint64_t seed);

// Decodes the transcript, labels the fed values with `label`, replays L, and
// re-applies the exceptions.
ExceptionWrapped theorem2_rebuild(
    const PacLearner& L, const WitnessCode& witness,
    const std::function<bool(const Example&)>& label, int n);

struct Theorem3Result {
  Representation combined;
  WitnessCode witness;
  double epsilon = 0.0;  // 1 / (2 sqrt(m))
  double delta = 0.0;    // gamma / 3
  std::uint64_t per_stage = 0;  // examples fed per stage
  std::vector<Example> e1, e2;  // stage-1 / stage-2 exception sets
  int attempts = 0;
  bool success = false;
  int failed_stage = 0;  // 0 = none; else the stage that broke its budget
  double compression = 0.0;
  bool consistent = false;
  bool disjoint = false;  // e1 and e2 share no example
};

// Three-stage majority construction: stage 1 learns the uniform sample
// distribution, stage 2 a reweighted distribution that pins stage-1's
// exceptions at mass epsilon each, stage 3 the uniform distribution over
// both exception sets. A stage succeeds when the learned error under its
// stage distribution is strictly below epsilon; failures retry with a fresh
// stream up to `retries` times and are otherwise reported, not thrown.
Theorem3Result theorem3_occam(const PacLearner& L, const Maj3Fn& maj3,
                              const LabeledSample& sample, int n, double s,
                              double gamma, std::uint64_t seed,
                              int retries = 0);

// Decodes the transcript (three equal segments), labels with `label`,
// replays L per stage, and combines with maj3.
Representation theorem3_rebuild(
    const PacLearner& L, const Maj3Fn& maj3, const WitnessCode& witness,
    const std::function<bool(const Example&)>& label, int n);

}  // namespace occam
