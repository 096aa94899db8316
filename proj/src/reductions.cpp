#include "occam/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "occam/errors.hpp"
#include "occam/learners.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// Exception wrapping

bool ExceptionWrapped::accepts(const Example& x) const {
  bool in = evaluate(base, x);
  bool flipped =
      std::find(exceptions.begin(), exceptions.end(), x) != exceptions.end();
  return in != flipped;
}

std::size_t ExceptionWrapped::length_bits() const {
  std::size_t bits = representation_length_bits(base);
  int per = bits_per_symbol(system_alphabet(system_of(base)));
  for (const auto& e : exceptions)
    bits += prefix_free_length(e.size()) + e.size() * std::size_t(per);
  return bits;
}

ExceptionWrapped exception_handle(ExceptionWrapped rep, const Example& x) {
  Alphabet a = system_alphabet(system_of(rep.base));
  validate_example(a, x);
  if (int(x.size()) != dimension_of(rep.base))
    throw InputFormatError("exception example has the wrong length");
  auto it = std::find(rep.exceptions.begin(), rep.exceptions.end(), x);
  if (it != rep.exceptions.end())
    rep.exceptions.erase(it);
  else
    rep.exceptions.push_back(x);
  return rep;
}

// ---------------------------------------------------------------------------
// Majority of three

ThresholdCircuit maj3_threshold(const ThresholdCircuit& r1,
                                const ThresholdCircuit& r2,
                                const ThresholdCircuit& r3) {
  if (r1.n != r2.n || r1.n != r3.n)
    throw std::invalid_argument("majority inputs must share one input count");
  int n = r1.n;
  ThresholdCircuit out;
  out.n = n;
  auto append = [&](const ThresholdCircuit& c, int shift) {
    for (ThresholdGate g : c.gates) {
      g.id += shift;
      for (int& in : g.inputs)
        if (in >= n) in += shift;
      out.gates.push_back(std::move(g));
    }
    return c.output_id + shift;
  };
  int o1 = append(r1, 0);
  int shift2 = int(r1.gates.size());
  int o2 = append(r2, shift2);
  int shift3 = shift2 + int(r2.gates.size());
  int o3 = append(r3, shift3);
  ThresholdGate vote;
  vote.id = n + int(out.gates.size());
  vote.weights = {1, 1, 1};
  vote.threshold = 2;
  vote.inputs = {o1, o2, o3};
  out.gates.push_back(vote);
  out.output_id = vote.id;
  out.validate();
  return out;
}

namespace {

// Conjunction of two Both-free terms; nullopt when they contradict.
std::optional<Monomial> conjoin(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    LiteralState sb = b.states[i];
    if (sb == LiteralState::Absent) continue;
    if (out.states[i] == LiteralState::Absent)
      out.states[i] = sb;
    else if (out.states[i] != sb)
      return std::nullopt;
  }
  return out;
}

void append_product(std::vector<Monomial>& terms, const DnfFormula& f,
                    const DnfFormula& g) {
  for (const auto& a : f.terms)
    for (const auto& b : g.terms)
      if (auto t = conjoin(a, b)) terms.push_back(std::move(*t));
}

}  // namespace

DnfFormula maj3_kdnf(const DnfFormula& h1, const DnfFormula& h2,
                     const DnfFormula& h3) {
  if (h1.n != h2.n || h1.n != h3.n)
    throw std::invalid_argument("majority inputs must share one input count");
  DnfFormula out;
  out.n = h1.n;
  append_product(out.terms, h1, h2);
  append_product(out.terms, h2, h3);
  append_product(out.terms, h3, h1);
  std::vector<Monomial> unique;
  for (auto& t : out.terms)
    if (std::find(unique.begin(), unique.end(), t) == unique.end())
      unique.push_back(std::move(t));
  out.terms = std::move(unique);
  return out;
}

// ---------------------------------------------------------------------------
// Packaged learners

PacLearner make_standard_monomial_learner() {
  PacLearner L;
  L.id = "standard";
  L.system = SystemId::Monomial;
  L.sample_complexity = [](double n, double, double epsilon, double delta) {
    return std::log((std::pow(3.0, n) + 1.0) / delta) / epsilon;
  };
  L.learn = [](const std::vector<LabeledExample>& sample,
               int n) -> Representation {
    return standard_monomial_learn(sample, n);
  };
  return L;
}

PacLearner make_bruteforce_threshold_learner(const CircuitEnvelope& envelope) {
  PacLearner L;
  L.id = "bruteforce-threshold";
  L.system = SystemId::Threshold;
  double size = double(circuit_class_size(envelope));
  L.sample_complexity = [size](double, double, double epsilon, double delta) {
    return std::log(size / delta) / epsilon;
  };
  L.learn = [envelope](const std::vector<LabeledExample>& sample,
                       int n) -> Representation {
    if (n != envelope.n)
      throw std::invalid_argument("learner envelope has a different n");
    std::optional<ThresholdCircuit> found;
    for_each_circuit(envelope, [&](const ThresholdCircuit& c) {
      for (const auto& e : sample)
        if (c.eval(e.value) != e.label) return true;
      found = c;
      return false;
    });
    if (!found)
      throw InfeasibleError("no circuit in the envelope fits the sample");
    return *found;
  };
  return L;
}

// ---------------------------------------------------------------------------
// Epsilon_0

double solve_epsilon0(const std::function<double(double)>& m_of_epsilon,
                      std::uint64_t m) {
  if (!m_of_epsilon)
    throw InputFormatError("learner lacks a sample-complexity function");
  if (m == 0) throw std::invalid_argument("m must be positive");
  auto g = [&](double eps) { return m_of_epsilon(eps) - eps * double(m); };
  if (g(1.0) > 0.0)
    throw InfeasibleError(
        "sample complexity exceeds eps*m on all of (0,1]; no break-even "
        "accuracy exists");
  double lo = 1.0 / double(m);
  for (int k = 0; k < 100 && g(lo) <= 0.0; ++k) lo /= 2.0;
  if (g(lo) <= 0.0) return lo;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-9 * hi) break;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Theorem 2

namespace {

// Uniform over the sample items: each distinct value gets multiplicity / m.
FiniteDistribution empirical_distribution(const LabeledSample& sample) {
  std::vector<Example> support;
  std::vector<double> probs;
  support.reserve(sample.distinct_count());
  probs.reserve(sample.distinct_count());
  for (const auto& e : sample.distinct()) {
    support.push_back(e.value);
    probs.push_back(double(sample.multiplicity(e.value)) /
                    double(sample.size()));
  }
  return FiniteDistribution(std::move(support), std::move(probs));
}

std::vector<LabeledExample> feed(const LabeledSample& sample,
                                 const FiniteDistribution& dist,
                                 std::uint64_t count, RngStream& rng) {
  std::vector<LabeledExample> fed;
  fed.reserve(std::size_t(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    const Example& x = dist.pick(rng.next_unit());
    fed.push_back({x, *sample.label_of(x)});
  }
  return fed;
}

std::vector<Example> values_of(const std::vector<LabeledExample>& fed) {
  std::vector<Example> v;
  v.reserve(fed.size());
  for (const auto& e : fed) v.push_back(e.value);
  return v;
}

}  // namespace

Theorem2Result theorem2_occam(const PacLearner& L, const LabeledSample& sample,
                              int n, double s, double gamma,
                              std::uint64_t seed) {
  if (sample.empty())
    throw InputFormatError("construction needs a nonempty sample");
  if (!L.sample_complexity)
    throw InputFormatError("learner lacks a sample-complexity function");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InputFormatError("gamma must lie in (0,1)");
  std::uint64_t m = sample.size();

  Theorem2Result result;
  result.epsilon0 = solve_epsilon0(
      [&](double eps) { return L.sample_complexity(double(n), s, eps, gamma); },
      m);
  result.fed_count = std::uint64_t(
      std::ceil(L.sample_complexity(double(n), s, result.epsilon0, gamma) -
                1e-9));
  if (result.fed_count == 0) result.fed_count = 1;

  FiniteDistribution mu = empirical_distribution(sample);

  RngStream rng(seed, 0);
  std::vector<LabeledExample> fed = feed(sample, mu, result.fed_count, rng);
  Representation learned = L.learn(fed, n);

  ExceptionWrapped wrapped{learned, {}};
  for (const auto& e : sample.distinct())
    if (evaluate(learned, e.value) != e.label)
      wrapped = exception_handle(std::move(wrapped), e.value);
  result.exceptions = wrapped.exceptions;

  Alphabet a = system_alphabet(L.system);
  Transcript transcript{values_of(fed), result.exceptions};
  result.witness = encode_examples_transcript(transcript, a, n);
  result.compression = double(m) / double(result.witness.bits.size());

  result.consistent = true;
  for (const auto& e : sample.items())
    if (wrapped.accepts(e.value) != e.label) result.consistent = false;

  double half = 1.0 / (2.0 * double(n));
  result.side_condition =
      double(m) >= 2.0 * double(n) *
                       L.sample_complexity(double(n), s, half, gamma);
  result.representation = std::move(wrapped);
  return result;
}

ExceptionWrapped theorem2_rebuild(
    const PacLearner& L, const WitnessCode& witness,
    const std::function<bool(const Example&)>& label, int n) {
  Alphabet a = system_alphabet(L.system);
  Transcript t = decode_examples_transcript(witness, a, n);
  std::vector<LabeledExample> fed;
  fed.reserve(t.fed.size());
  for (const auto& x : t.fed) fed.push_back({x, label(x)});
  ExceptionWrapped wrapped{L.learn(fed, n), {}};
  for (const auto& x : t.exceptions)
    wrapped = exception_handle(std::move(wrapped), x);
  return wrapped;
}

// ---------------------------------------------------------------------------
// Theorem 3

namespace {

struct StageOutcome {
  Representation rep;
  std::vector<Example> errors;  // misclassified sample values, sample order
  double error_mass = 0.0;
  std::vector<Example> fed;
};

StageOutcome run_stage(const PacLearner& L, const LabeledSample& sample,
                       const FiniteDistribution& dist, std::uint64_t count,
                       int n, RngStream& rng) {
  StageOutcome out;
  std::vector<LabeledExample> fed = feed(sample, dist, count, rng);
  out.fed = values_of(fed);
  out.rep = L.learn(fed, n);
  for (const auto& e : sample.distinct()) {
    if (evaluate(out.rep, e.value) != e.label) {
      out.errors.push_back(e.value);
      out.error_mass += dist.mass_where(
          [&](const Example& x) { return x == e.value; });
    }
  }
  return out;
}

}  // namespace

Theorem3Result theorem3_occam(const PacLearner& L, const Maj3Fn& maj3,
                              const LabeledSample& sample, int n, double s,
                              double gamma, std::uint64_t seed, int retries) {
  if (sample.empty())
    throw InputFormatError("construction needs a nonempty sample");
  if (!L.sample_complexity)
    throw InputFormatError("learner lacks a sample-complexity function");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InputFormatError("gamma must lie in (0,1)");
  if (!maj3) throw InputFormatError("missing majority-of-three operation");
  if (retries < 0) throw InputFormatError("retries must be >= 0");

  std::uint64_t m = sample.size();
  Theorem3Result result;
  result.epsilon = 1.0 / (2.0 * std::sqrt(double(m)));
  result.delta = gamma / 3.0;
  result.per_stage = std::uint64_t(std::ceil(
      L.sample_complexity(double(n), s, result.epsilon, result.delta) - 1e-9));
  if (result.per_stage == 0) result.per_stage = 1;

  FiniteDistribution mu1 = empirical_distribution(sample);
  const std::vector<Example>& support = mu1.support();
  const std::vector<double>& weights1 = mu1.probabilities();

  Alphabet a = system_alphabet(L.system);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    result.attempts = attempt + 1;
    result.failed_stage = 0;
    RngStream rng(seed, std::uint64_t(attempt));
    RngStream rng1 = rng.split(1), rng2 = rng.split(2), rng3 = rng.split(3);

    StageOutcome s1 = run_stage(L, sample, mu1, result.per_stage, n, rng1);
    result.e1 = s1.errors;
    bool ok1 = s1.error_mass < result.epsilon;

    // Stage 2: pin each stage-1 exception at mass epsilon; the remaining
    // mass follows mu1 restricted to the other sample points. A successful
    // stage 1 leaves |e1| * epsilon < 1/4; if it failed so badly that no
    // valid reweighting exists, stage 2 reuses mu1 (the attempt is already
    // marked failed).
    FiniteDistribution mu2 = mu1;
    if (!result.e1.empty()) {
      std::unordered_set<Example> in_e1(result.e1.begin(), result.e1.end());
      double pinned = result.epsilon * double(result.e1.size());
      double outside = 0.0;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (!in_e1.count(support[i])) outside += weights1[i];
      if (pinned < 1.0 && outside > 0.0) {
        double scale = (1.0 - pinned) / outside;
        std::vector<double> probs2(support.size());
        for (std::size_t i = 0; i < support.size(); ++i)
          probs2[i] = in_e1.count(support[i]) ? result.epsilon
                                              : weights1[i] * scale;
        mu2 = FiniteDistribution(support, probs2);
      }
    }
    StageOutcome s2 = run_stage(L, sample, mu2, result.per_stage, n, rng2);
    result.e2 = s2.errors;
    bool ok2 = s2.error_mass < result.epsilon;

    // Stage 3: uniform over both exception sets (each point outweighs
    // epsilon, so success means zero errors there).
    std::vector<Example> e_union = result.e1;
    for (const auto& x : result.e2)
      if (std::find(e_union.begin(), e_union.end(), x) == e_union.end())
        e_union.push_back(x);
    FiniteDistribution mu3 = e_union.empty()
                                 ? mu1
                                 : FiniteDistribution::uniform(e_union);
    StageOutcome s3 = run_stage(L, sample, mu3, result.per_stage, n, rng3);
    bool ok3 = s3.error_mass < result.epsilon;

    result.success = ok1 && ok2 && ok3;
    if (!ok1)
      result.failed_stage = 1;
    else if (!ok2)
      result.failed_stage = 2;
    else if (!ok3)
      result.failed_stage = 3;

    result.combined = maj3(s1.rep, s2.rep, s3.rep);

    std::vector<Example> fed_all;
    fed_all.reserve(3 * std::size_t(result.per_stage));
    for (const auto& x : s1.fed) fed_all.push_back(x);
    for (const auto& x : s2.fed) fed_all.push_back(x);
    for (const auto& x : s3.fed) fed_all.push_back(x);
    Transcript transcript{std::move(fed_all), {}};
    result.witness = encode_examples_transcript(transcript, a, n);
    result.compression = double(m) / double(result.witness.bits.size());

    result.consistent = true;
    for (const auto& e : sample.items())
      if (evaluate(result.combined, e.value) != e.label)
        result.consistent = false;

    result.disjoint = true;
    {
      std::unordered_set<Example> in_e1(result.e1.begin(), result.e1.end());
      for (const auto& x : result.e2)
        if (in_e1.count(x)) result.disjoint = false;
    }

    if (result.success) break;
  }
  return result;
}

Representation theorem3_rebuild(
    const PacLearner& L, const Maj3Fn& maj3, const WitnessCode& witness,
    const std::function<bool(const Example&)>& label, int n) {
  Alphabet a = system_alphabet(L.system);
  Transcript t = decode_examples_transcript(witness, a, n);
  if (!t.exceptions.empty())
    throw InputFormatError("three-stage transcripts carry no exceptions");
  if (t.fed.size() % 3 != 0)
    throw InputFormatError(
        "three-stage transcript length is not divisible by three");
  std::size_t per = t.fed.size() / 3;
  std::vector<Representation> reps;
  for (int stage = 0; stage < 3; ++stage) {
    std::vector<LabeledExample> fed;
    fed.reserve(per);
    for (std::size_t i = 0; i < per; ++i) {
      const Example& x = t.fed[std::size_t(stage) * per + i];
      fed.push_back({x, label(x)});
    }
    reps.push_back(L.learn(fed, n));
  }
  return maj3(reps[0], reps[1], reps[2]);
}

}  // namespace occam
