// Acceptance gate: end-to-end checks over the built library, one printed
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "occam/bounds.hpp"
#include "occam/coding.hpp"
#include "occam/core.hpp"
#include "occam/harness.hpp"
#include "occam/learners.hpp"
#include "occam/reductions.hpp"

namespace {

using namespace occam;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

CompressionSpec const_p(double p, double alpha = 0.0) {
  return CompressionSpec::poly(alpha,
                               [p](double, double, double) { return p; });
}

std::string random_dna(std::size_t length, RngStream& rng) {
  static const char* symbols = "ACGT";
  std::string t;
  t.reserve(length);
  for (std::size_t i = 0; i < length; ++i)
    t += symbols[rng.next_below(4)];
  return t;
}

// Overlapping windows that cover the whole string: random forward steps of
// at most 4n/5, with the final window pinned to the end.
std::vector<Example> coverage_windows(const std::string& text, int n,
                                      RngStream& rng) {
  std::vector<Example> windows;
  std::size_t len = text.size(), width = std::size_t(n);
  std::size_t pos = 0;
  while (pos + width <= len) {
    windows.push_back(text.substr(pos, width));
    if (pos == len - width) break;
    std::size_t step =
        1 + rng.next_below(std::uint64_t(std::max(1, 4 * n / 5)));
    pos = std::min(pos + step, len - width);
  }
  return windows;
}

ThresholdCircuit random_envelope_gate(int n, RngStream& rng) {
  ThresholdGate g;
  g.id = n;
  int degree = 1 + int(rng.next_below(3));
  for (int d = 0; d < degree; ++d) {
    int in = int(rng.next_below(std::uint64_t(n)));
    if (std::find(g.inputs.begin(), g.inputs.end(), in) == g.inputs.end())
      g.inputs.push_back(in);
  }
  for (std::size_t i = 0; i < g.inputs.size(); ++i) {
    std::int64_t w = std::int64_t(rng.next_below(4)) - 2;
    if (w >= 0) ++w;  // nonzero weights in [-2, 2]
    g.weights.push_back(w);
  }
  g.threshold = std::int64_t(rng.next_below(9)) - 4;
  ThresholdCircuit c;
  c.n = n;
  c.gates = {g};
  c.output_id = n;
  c.validate();
  return c;
}

ThresholdCircuit random_circuit(int n, RngStream& rng) {
  ThresholdCircuit c;
  c.n = n;
  int gates = 1 + int(rng.next_below(2));
  for (int k = 0; k < gates; ++k) {
    ThresholdGate g;
    g.id = n + k;
    int pool = n + k;
    int degree = 1 + int(rng.next_below(3));
    for (int d = 0; d < degree; ++d) {
      int in = int(rng.next_below(std::uint64_t(pool)));
      if (std::find(g.inputs.begin(), g.inputs.end(), in) == g.inputs.end())
        g.inputs.push_back(in);
    }
    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
      std::int64_t w = std::int64_t(rng.next_below(4)) - 2;
      if (w >= 0) ++w;
      g.weights.push_back(w);
    }
    g.threshold = std::int64_t(rng.next_below(9)) - 4;
    c.gates.push_back(g);
  }
  c.output_id = n + gates - 1;
  c.validate();
  return c;
}

Monomial random_width2_term(int n, RngStream& rng) {
  Monomial t = Monomial::always_true(n);
  int width = 1 + int(rng.next_below(2));
  for (int k = 0; k < width; ++k) {
    std::size_t var = std::size_t(rng.next_below(std::uint64_t(n)));
    t.states[var] =
        rng.next_below(2) ? LiteralState::Positive : LiteralState::Negative;
  }
  return t;
}

Maj3Fn threshold_maj3() {
  return [](const Representation& a, const Representation& b,
            const Representation& c) -> Representation {
    return maj3_threshold(std::get<ThresholdCircuit>(a),
                          std::get<ThresholdCircuit>(b),
                          std::get<ThresholdCircuit>(c));
  };
}

LabeledSample uniform_binary_sample(const std::function<bool(const Example&)>&
                                        label,
                                    int n, std::uint64_t m, RngStream& rng) {
  std::vector<LabeledExample> items;
  items.reserve(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    Example x;
    for (int b = 0; b < n; ++b) x += char('0' + rng.next_below(2));
    bool l = label(x);
    items.push_back({std::move(x), l});
  }
  return LabeledSample(std::move(items));
}

// ---------------------------------------------------------------------------
// Criterion 1: headline bound-only comparison at sequencing scale.

Outcome criterion1() {
  double t0 = now_ms();
  App1Report r = application1_experiment(3000000000ULL, 500, 0.1, 0.1, 0,
                                         /*bound_only=*/true, 0);
  double elapsed = now_ms() - t0;
  std::ostringstream d;
  d << "improvement ratio " << r.ratio << " (want [6.5, 7.5]), " << elapsed
    << " ms (budget 1000)";
  return {r.ratio >= 6.5 && r.ratio <= 7.5 && elapsed < 1000.0, d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 2: superstring witness codec at desk scale, 50 instances.

Outcome criterion2() {
  struct Shape {
    std::size_t s;
    int n;
  };
  const std::vector<Shape> shapes{
      {5000, 50},   {6000, 60},   {8000, 50},   {10000, 100}, {15000, 120},
      {20000, 150}, {30000, 200}, {50000, 300}, {75000, 400}, {100000, 500}};

  double t0 = now_ms();
  int bad = -1;
  std::string why;
  for (int i = 0; i < 50 && bad < 0; ++i) {
    const Shape& shape = shapes[std::size_t(i) % shapes.size()];
    RngStream rng(9000, std::uint64_t(i));
    std::string text = random_dna(shape.s, rng);
    SuperstringRep target{text, shape.n};
    std::vector<Example> windows = coverage_windows(text, shape.n, rng);
    SuperstringRep hypothesis = greedy_superstring(windows);

    SuperstringCodeStats stats;
    WitnessCode code =
        encode_superstring_given_target(hypothesis, target, windows, &stats);
    SuperstringRep rebuilt = decode_superstring_given_target(code, target);

    std::size_t budget = (2 * hypothesis.text.size() + std::size_t(shape.n) -
                          1) /
                         std::size_t(shape.n);
    std::size_t per_group =
        superstring_group_bits(target.text.size(), std::size_t(shape.n));
    if (!stats.examples_cover_hypothesis) {
      bad = i;
      why = "examples do not cover the hypothesis";
    } else if (!(rebuilt == hypothesis)) {
      bad = i;
      why = "decode mismatch";
    } else if (stats.groups > budget) {
      bad = i;
      why = "group count exceeds ceil(2|t'|/n)";
    } else if (code.bits.size() > stats.groups * per_group + 1) {
      bad = i;
      why = "bit length exceeds the group formula";
    }
  }
  double elapsed = now_ms() - t0;
  std::ostringstream d;
  if (bad >= 0)
    d << "instance " << bad << ": " << why;
  else
    d << "50/50 instances round-trip within the group budget, " << elapsed
      << " ms (budget 60000)";
  return {bad < 0 && elapsed < 60000.0, d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 3: conjunction comparison with verified PAC success rate.

Outcome criterion3() {
  double t0 = now_ms();
  double bar = 0.9 - 3.0 * std::sqrt(0.1 * 0.9 / 200.0);
  std::ostringstream d;
  bool ok = true;
  for (int n : {16, 36, 64}) {
    App2Report r = application2_experiment(n, -1, 0.1, 0.1, 200,
                                           std::uint64_t(303 + n), 4);
    bool strict = r.m_kc < r.m_length;
    bool rate = r.success_rate >= bar;
    ok = ok && strict && rate;
    d << "n=" << n << ": m " << r.m_kc << "<" << r.m_length << "="
      << (strict ? "yes" : "NO") << " rate " << r.success_rate << ">="
      << bar << "=" << (rate ? "yes" : "NO") << "; ";
  }
  double elapsed = now_ms() - t0;
  d << elapsed << " ms (budget 120000)";
  return {ok && elapsed < 120000.0, d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 4: bound calculators against closed forms and the chain.

Outcome criterion4() {
  // Closed-form equivalence on 100 random tuples, within +-1.
  RngStream rng(41, 0);
  int accepted = 0, mismatched = 0;
  for (int draws = 0; accepted < 100 && draws < 10000; ++draws) {
    double alpha = 0.9 * rng.next_unit();
    double p = 0.5 + 20.0 * rng.next_unit();
    double eps = 0.02 + 0.9 * rng.next_unit();
    double delta = 0.02 + 0.9 * rng.next_unit();
    bool det = rng.next_below(2) == 1;
    double first = (2.0 / eps) * std::log((det ? 1.0 : 2.0) / delta);
    double second =
        std::pow(2.0 * std::log(2.0) * p / eps, 1.0 / (1.0 - alpha));
    double want_d = std::ceil(std::max(first, second));
    if (!(want_d <= 1e12)) continue;  // stay where doubles resolve +-1
    ++accepted;
    std::uint64_t got = kc_bound(const_p(p, alpha), 3, 9, eps, delta, det);
    std::uint64_t want = std::uint64_t(want_d);
    if (got + 1 < want || got > want + 1) ++mismatched;
  }

  // Cardinality chain d <= log2|H| <= n*d with brute-force d.
  bool chain_ok = true;
  for (int n : {2, 3}) {
    int d = vc_dim_bruteforce(SystemId::Monomial, n,
                              full_domain(Alphabet::Binary, n));
    chain_ok = chain_ok && d == n &&
               cardinality_chain_holds(d, double(monomial_class_size(n)), n);
  }

  // Monotonicity grid: looser requirements never demand more samples.
  bool monotone = true;
  const std::vector<double> grid{0.05, 0.1, 0.2, 0.4, 0.8};
  for (double e1 : grid)
    for (double e2 : grid)
      for (double d1 : grid)
        for (double d2 : grid) {
          if (e1 > e2 || d1 > d2) continue;
          monotone =
              monotone &&
              vc_upper_bound(3, e1, d1) >= vc_upper_bound(3, e2, d2) &&
              finite_class_bound(100, e1, d1) >=
                  finite_class_bound(100, e2, d2) &&
              length_based_bound(16, e1, d1, 0.3, 1.0) >=
                  length_based_bound(16, e2, d2, 0.3, 1.0) &&
              kc_bound(const_p(8.0), 4, 16, e1, d1, false) >=
                  kc_bound(const_p(8.0), 4, 16, e2, d2, false);
        }

  std::ostringstream d;
  d << accepted << "/100 tuples, " << mismatched
    << " outside +-1; chain n in {2,3} " << (chain_ok ? "holds" : "BROKEN")
    << "; monotonicity " << (monotone ? "holds" : "BROKEN");
  return {accepted == 100 && mismatched == 0 && chain_ok && monotone, d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 5: single-stage compression construction on monomial samples.

Outcome criterion5() {
  PacLearner learner = make_standard_monomial_learner();
  const int dims[3] = {4, 5, 6};
  int inconsistent = 0, broken_roundtrip = 0, uncompressed_large = 0;
  for (int i = 0; i < 20; ++i) {
    int n = dims[i % 3];
    std::uint64_t m = (i % 2 == 0) ? 128 : 512;
    RngStream rng(5100, std::uint64_t(i));
    int literals = m == 512 ? 1 + int(rng.next_below(2))
                            : 1 + int(rng.next_below(std::uint64_t(n)));
    Monomial target = random_monomial_of_size(n, literals, rng);
    LabeledSample sample = uniform_binary_sample(
        [&](const Example& x) { return target.accepts(x); }, n, m, rng);

    Theorem2Result result = theorem2_occam(learner, sample, n, 2.0 * n, 0.1,
                                           std::uint64_t(1000 + i));
    if (!result.consistent) ++inconsistent;

    ExceptionWrapped rebuilt = theorem2_rebuild(
        learner, result.witness,
        [&](const Example& x) {
          auto label = sample.label_of(x);
          return label.has_value() && *label;
        },
        n);
    bool same = rebuilt.base == result.representation.base &&
                rebuilt.exceptions == result.representation.exceptions;
    if (!same) ++broken_roundtrip;
    if (m == 512 && !(result.compression > 1.0)) ++uncompressed_large;
  }
  std::ostringstream d;
  d << "20 instances: " << inconsistent << " inconsistent, "
    << broken_roundtrip << " round-trip failures, " << uncompressed_large
    << " large instances without compression > 1";
  return {inconsistent == 0 && broken_roundtrip == 0 &&
              uncompressed_large == 0,
          d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 6: three-stage majority construction on threshold samples.

Outcome criterion6() {
  CircuitEnvelope envelope{4, 1, 3, -2, 2};
  PacLearner learner = make_bruteforce_threshold_learner(envelope);
  Maj3Fn maj3 = threshold_maj3();
  int failures = 0, overlapping = 0, inconsistent = 0;
  for (int i = 0; i < 20; ++i) {
    RngStream rng(6100, std::uint64_t(i));
    ThresholdCircuit target = random_envelope_gate(4, rng);
    LabeledSample sample = uniform_binary_sample(
        [&](const Example& x) { return target.eval(x); }, 4, 64, rng);
    Theorem3Result result =
        theorem3_occam(learner, maj3, sample, 4, 8.0, 0.3,
                       std::uint64_t(2000 + i), /*retries=*/0);
    if (!result.success) {
      ++failures;
      continue;
    }
    if (!result.disjoint) ++overlapping;
    if (!result.consistent) ++inconsistent;
  }
  // Stage-failure rate <= gamma + 3 sigma over 20 runs.
  double rate = failures / 20.0;
  double bar = 0.3 + 3.0 * std::sqrt(0.3 * 0.7 / 20.0);
  std::ostringstream d;
  d << failures << "/20 stage failures (rate " << rate << ", bar " << bar
    << "); " << overlapping << " overlapping exception sets, " << inconsistent
    << " inconsistent successes";
  return {overlapping == 0 && inconsistent == 0 && rate <= bar, d.str()};
}

// ---------------------------------------------------------------------------
// Criterion 7: majority-of-three semantics against brute-force votes.

Outcome criterion7() {
  int circuit_mismatches = 0;
  RngStream rng(7100, 0);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + int(rng.next_below(3));  // 2..4
    ThresholdCircuit a = random_circuit(n, rng);
    ThresholdCircuit b = random_circuit(n, rng);
    ThresholdCircuit c = random_circuit(n, rng);
    ThresholdCircuit combined = maj3_threshold(a, b, c);
    for (const auto& x : full_domain(Alphabet::Binary, n)) {
      int votes = int(a.eval(x)) + int(b.eval(x)) + int(c.eval(x));
      if (combined.eval(x) != (votes >= 2)) ++circuit_mismatches;
    }
  }

  int dnf_mismatches = 0, wide = 0;
  RngStream rng2(7200, 0);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + int(rng2.next_below(3));  // 3..5
    auto make = [&]() {
      DnfFormula f;
      f.n = n;
      int terms = 1 + int(rng2.next_below(3));
      for (int k = 0; k < terms; ++k)
        f.terms.push_back(random_width2_term(n, rng2));
      return f;
    };
    DnfFormula h1 = make(), h2 = make(), h3 = make();
    DnfFormula combined = maj3_kdnf(h1, h2, h3);
    if (combined.width() > 4) ++wide;  // 2k with k = 2
    for (const auto& x : full_domain(Alphabet::Binary, n)) {
      int votes = int(h1.accepts(x)) + int(h2.accepts(x)) + int(h3.accepts(x));
      if (combined.accepts(x) != (votes >= 2)) ++dnf_mismatches;
    }
  }
  std::ostringstream d;
  d << "200 circuit triples: " << circuit_mismatches
    << " pointwise mismatches; 200 formula triples: " << dnf_mismatches
    << " mismatches, " << wide << " outputs wider than 2k";
  return {circuit_mismatches == 0 && dnf_mismatches == 0 && wide == 0,
          d.str()};
}

}  // namespace

int main() {
  std::vector<Outcome> outcomes;
  auto run = [&](Outcome (*fn)()) {
    try {
      outcomes.push_back(fn());
    } catch (const std::exception& e) {
      outcomes.push_back({false, std::string("exception: ") + e.what()});
    }
  };
  run(criterion1);
  run(criterion2);
  run(criterion3);
  run(criterion4);
  run(criterion5);
  run(criterion6);
  run(criterion7);

  // Criterion 8: genome-scale assembly and true Kolmogorov-complexity
  // measurement are declared out of scope; their stand-ins are the formula
  // arithmetic of criterion 1 and the desk-scale codec runs of criterion 2.
  bool stand_ins = outcomes[0].pass && outcomes[1].pass;
  outcomes.push_back(
      {stand_ins,
       std::string("out-of-scope targets covered by stand-ins: criteria 1 "
                   "and 2 ") +
           (stand_ins ? "passed" : "FAILED")});

  int failed = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    std::cout << "CRITERION " << (i + 1) << (o.pass ? " PASS" : " FAIL")
              << " (" << o.detail << ")\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ACCEPTANCE: all 8 criteria passed"
                            : "ACCEPTANCE: " + std::to_string(failed) +
                                  " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
