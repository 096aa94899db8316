#include "occam/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "occam/bounds.hpp"
#include "occam/coding.hpp"
#include "occam/errors.hpp"
#include "occam/learners.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// VC dimension

int vc_dim_from_labelings(const std::vector<std::uint32_t>& labelings,
                          int domain_size) {
  if (domain_size < 0 || domain_size > 16)
    throw InfeasibleError("shattering check limited to 16 domain points");
  std::vector<std::uint32_t> distinct(labelings);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  int best = 0;
  std::uint32_t subsets = std::uint32_t(1) << domain_size;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    int k = std::popcount(s);
    if (k <= best) continue;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t l : distinct) seen.insert(l & s);
    if (seen.size() == (std::size_t(1) << k)) best = k;
  }
  return best;
}

int vc_dim_bruteforce(SystemId system, int n,
                      const std::vector<Example>& domain) {
  if (domain.size() > 16)
    throw InfeasibleError("shattering check limited to 16 domain points");
  if (system != SystemId::Monomial)
    throw InfeasibleError(
        "VC brute force enumerates monomial classes only");
  if (n < 1 || n > 10)
    throw InfeasibleError("monomial enumeration limited to n <= 10");
  std::vector<std::uint32_t> labelings;
  std::uint64_t size = monomial_class_size(n);
  labelings.reserve(std::size_t(size));
  for (std::uint64_t i = 0; i < size; ++i) {
    Monomial m = monomial_by_index(i, n);
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < domain.size(); ++j)
      if (m.accepts(domain[j])) mask |= std::uint32_t(1) << j;
    labelings.push_back(mask);
  }
  return vc_dim_from_labelings(labelings, int(domain.size()));
}

// ---------------------------------------------------------------------------
// Configuration

const char* bound_source_name(BoundSource b) {
  switch (b) {
    case BoundSource::Vc:
      return "vc";
    case BoundSource::Finite:
      return "finite";
    case BoundSource::Length:
      return "length";
    case BoundSource::Kc:
      return "kc";
  }
  return "?";
}

BoundSource parse_bound_source(const std::string& text) {
  if (text == "vc") return BoundSource::Vc;
  if (text == "finite") return BoundSource::Finite;
  if (text == "length") return BoundSource::Length;
  if (text == "kc") return BoundSource::Kc;
  throw InputFormatError("unknown bound source '" + text +
                         "' (vc|finite|length|kc)");
}

namespace {

using nlohmann::json;

void check_config(const ExperimentConfig& c) {
  if (c.trials < 1) throw InputFormatError("trials must be >= 1");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0))
    throw InputFormatError("epsilon must lie in (0,1)");
  if (!(c.delta > 0.0 && c.delta < 1.0))
    throw InputFormatError("delta must lie in (0,1)");
  if (c.n < 1) throw InputFormatError("n must be >= 1");
  if (c.threads < 1) throw InputFormatError("threads must be >= 1");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputFormatError(std::string("config is not valid JSON: ") +
                           e.what());
  }
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw InputFormatError("config must be a JSON object");
    c.system = parse_system(j.at("system").get<std::string>());
    c.learner = j.at("learner").get<std::string>();
    c.bound = parse_bound_source(j.value("bound", std::string("finite")));
    c.n = j.at("n").get<int>();
    c.epsilon = j.at("epsilon").get<double>();
    c.delta = j.at("delta").get<double>();
    c.trials = j.at("trials").get<int>();
    c.seed = j.value("seed", std::uint64_t(0));
    c.threads = j.value("threads", 1);
    c.sample_size = j.value("sample_size", std::uint64_t(0));
    c.max_size = j.value("max_size", 1);
    if (j.contains("target")) {
      const json& t = j.at("target");
      std::string kind = t.value("kind", std::string("random"));
      if (kind == "explicit") {
        c.target.kind = TargetSpec::Kind::Explicit;
        c.target.text = t.at("text").get<std::string>();
      } else if (kind == "random") {
        c.target.kind = TargetSpec::Kind::Random;
        c.target.size = t.value("size", -1);
      } else {
        throw InputFormatError("target kind must be explicit or random");
      }
    }
    if (j.contains("distribution")) {
      const json& d = j.at("distribution");
      std::string kind = d.value("kind", std::string("uniform-full"));
      if (kind == "uniform-full") {
        c.distribution.kind = DistributionSpec::Kind::UniformFull;
      } else if (kind == "uniform-support") {
        c.distribution.kind = DistributionSpec::Kind::UniformSupport;
        c.distribution.support =
            d.at("support").get<std::vector<std::string>>();
      } else if (kind == "explicit") {
        c.distribution.kind = DistributionSpec::Kind::Explicit;
        c.distribution.support =
            d.at("support").get<std::vector<std::string>>();
        c.distribution.weights = d.at("weights").get<std::vector<double>>();
      } else if (kind == "positives-negatives") {
        c.distribution.kind = DistributionSpec::Kind::PositivesNegatives;
        c.distribution.negatives = d.value("negatives", std::uint64_t(0));
      } else {
        throw InputFormatError("unknown distribution kind '" + kind + "'");
      }
    }
    if (j.contains("envelope")) {
      const json& e = j.at("envelope");
      c.envelope.n = e.value("n", c.n);
      c.envelope.max_gates = e.value("max_gates", 1);
      c.envelope.max_degree = e.value("max_degree", 3);
      c.envelope.weight_min = e.value("weight_min", std::int64_t(-2));
      c.envelope.weight_max = e.value("weight_max", std::int64_t(2));
    } else {
      c.envelope.n = c.n;
    }
  } catch (const json::exception& e) {
    throw InputFormatError(std::string("config field error: ") + e.what());
  }
  check_config(c);
  return c;
}

// ---------------------------------------------------------------------------
// pac_verify

namespace {

Representation make_trial_target(const ExperimentConfig& c, RngStream& rng) {
  switch (c.system) {
    case SystemId::Monomial: {
      if (c.target.kind == TargetSpec::Kind::Explicit)
        return parse_monomial(c.target.text, c.n);
      if (c.target.size >= 0)
        return random_monomial_of_size(c.n, c.target.size, rng);
      return random_monomial(c.n, rng);
    }
    case SystemId::Threshold: {
      if (c.target.kind == TargetSpec::Kind::Explicit)
        throw InputFormatError(
            "explicit threshold targets are not supported; use random");
      std::uint64_t size = circuit_class_size(c.envelope);
      if (size == 0) throw InfeasibleError("empty circuit envelope");
      std::uint64_t want = rng.next_below(size);
      ThresholdCircuit picked;
      std::uint64_t at = 0;
      for_each_circuit(c.envelope, [&](const ThresholdCircuit& cc) {
        if (at++ == want) {
          picked = cc;
          return false;
        }
        return true;
      });
      return picked;
    }
    default:
      throw InputFormatError(
          "verification targets must be monomial or threshold");
  }
}

// All satisfying assignments of a monomial (free variables enumerated).
std::vector<Example> monomial_positives(const Monomial& m) {
  if (m.has_both()) throw InfeasibleError("target accepts no examples");
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < m.states.size(); ++i)
    if (m.states[i] == LiteralState::Absent) free.push_back(i);
  if (free.size() > 20)
    throw InfeasibleError("too many free variables to enumerate positives");
  Example base(m.states.size(), '0');
  for (std::size_t i = 0; i < m.states.size(); ++i)
    if (m.states[i] == LiteralState::Positive) base[i] = '1';
  std::vector<Example> out;
  out.reserve(std::size_t(1) << free.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << free.size());
       ++bits) {
    Example x = base;
    for (std::size_t k = 0; k < free.size(); ++k)
      x[free[k]] = (bits >> k) & 1 ? '1' : '0';
    out.push_back(std::move(x));
  }
  return out;
}

FiniteDistribution make_trial_distribution(const ExperimentConfig& c,
                                           const Representation& target,
                                           RngStream& rng) {
  Alphabet a = system_alphabet(c.system);
  switch (c.distribution.kind) {
    case DistributionSpec::Kind::UniformFull:
      return FiniteDistribution::uniform(full_domain(a, c.n));
    case DistributionSpec::Kind::UniformSupport:
    case DistributionSpec::Kind::Explicit: {
      for (const auto& x : c.distribution.support) {
        validate_example(a, x);
        if (int(x.size()) != c.n)
          throw InputFormatError("support example has wrong length");
      }
      if (c.distribution.kind == DistributionSpec::Kind::UniformSupport)
        return FiniteDistribution::uniform(c.distribution.support);
      return FiniteDistribution(c.distribution.support,
                                c.distribution.weights);
    }
    case DistributionSpec::Kind::PositivesNegatives: {
      const Monomial* m = std::get_if<Monomial>(&target);
      if (!m)
        throw InputFormatError(
            "positives-negatives distributions need a monomial target");
      std::vector<Example> support = monomial_positives(*m);
      std::size_t want = c.distribution.negatives
                             ? c.distribution.negatives
                             : support.size();
      if (m->literal_count() == 0)
        throw InfeasibleError("target accepts everything; no negatives exist");
      std::unordered_set<Example> seen(support.begin(), support.end());
      std::size_t positives = support.size();
      std::size_t attempts = 0, cap = 10000 + 200 * want;
      while (support.size() < positives + want) {
        if (++attempts > cap)
          throw InfeasibleError("could not sample enough distinct negatives");
        Example x(std::size_t(c.n), '0');
        for (auto& ch : x) ch = rng.next_below(2) ? '1' : '0';
        if (m->accepts(x) || !seen.insert(x).second) continue;
        support.push_back(std::move(x));
      }
      return FiniteDistribution::uniform(std::move(support));
    }
  }
  throw InputFormatError("unhandled distribution kind");
}

std::uint64_t resolve_sample_size(const ExperimentConfig& c,
                                  const Representation& target) {
  if (c.sample_size > 0) return c.sample_size;
  switch (c.bound) {
    case BoundSource::Vc: {
      if (c.system != SystemId::Monomial)
        throw InfeasibleError("vc bound wired for monomial classes only");
      // Exact for conjunction classes: n, except n = 1 where the
      // always-false concept lets both points be shattered.
      std::uint64_t d = c.n == 1 ? 2 : std::uint64_t(c.n);
      return vc_upper_bound(d, c.epsilon, c.delta);
    }
    case BoundSource::Finite: {
      double size = c.system == SystemId::Monomial
                        ? double(monomial_class_size(c.n))
                        : double(circuit_class_size(c.envelope));
      return finite_class_bound(size, c.epsilon, c.delta);
    }
    case BoundSource::Length: {
      double s = double(representation_length_bits(target));
      return length_based_bound(s, c.epsilon, c.delta, 0.0, 1.0);
    }
    case BoundSource::Kc: {
      const Monomial* m = std::get_if<Monomial>(&target);
      if (!m)
        throw InfeasibleError("kc bound wired for monomial targets only");
      double p = double(monomial_code_bound_bits(*m));
      if (p < 1.0) p = 1.0;
      CompressionSpec spec = CompressionSpec::poly(
          0.0, [p](double, double, double) { return p; });
      return kc_bound(spec, double(c.n),
                      double(representation_length_bits(target)), c.epsilon,
                      c.delta, true);
    }
  }
  throw InputFormatError("unhandled bound source");
}

Representation run_learner(const ExperimentConfig& c,
                           const std::vector<LabeledExample>& sample,
                           const Representation& target) {
  if (c.learner == "cheat") return target;
  if (c.learner == "standard") {
    if (c.system != SystemId::Monomial)
      throw InputFormatError("the standard learner learns monomials");
    return standard_monomial_learn(sample, c.n);
  }
  if (c.learner == "haussler") {
    if (c.system != SystemId::Monomial)
      throw InputFormatError("the set-cover learner learns monomials");
    return haussler_monomial_learn(LabeledSample(sample), c.n);
  }
  if (c.learner == "bruteforce") {
    auto rep = consistent_bruteforce(LabeledSample(sample), c.system, c.n,
                                     c.max_size);
    if (!rep) throw InfeasibleError("no consistent representation in class");
    return *rep;
  }
  throw InputFormatError("unknown learner '" + c.learner +
                         "' (standard|haussler|bruteforce|cheat)");
}

TrialResult run_trial(const ExperimentConfig& c, int index) {
  auto start = std::chrono::steady_clock::now();
  TrialResult r;
  r.trial = index;
  RngStream base(c.seed, std::uint64_t(index));
  RngStream target_rng = base.split(0);
  RngStream negatives_rng = base.split(1);
  RngStream oracle_rng = base.split(2);

  Representation target = make_trial_target(c, target_rng);
  FiniteDistribution dist = make_trial_distribution(c, target, negatives_rng);
  r.m = resolve_sample_size(c, target);
  if (is_infinite_samples(r.m))
    throw InfeasibleError("bound source yields INFINITY for this instance");

  Oracle oracle(dist, target, oracle_rng);
  std::vector<LabeledExample> sample =
      oracle.draw_many(std::size_t(r.m));
  bool learned = false;
  Representation hypothesis = target;
  try {
    hypothesis = run_learner(c, sample, target);
    learned = true;
  } catch (const InputFormatError&) {
    throw;  // configuration problems are not trial outcomes
  } catch (const std::exception&) {
    learned = false;
  }
  if (learned) {
    r.error = symmetric_difference_error(hypothesis, target, dist);
    if (c.system == SystemId::Monomial) {
      const Monomial* ht = std::get_if<Monomial>(&hypothesis);
      const Monomial* tt = std::get_if<Monomial>(&target);
      if (ht && tt) {
        try {
          r.witness_bits = std::int64_t(
              encode_monomial_given_target(*ht, *tt).bits.size());
        } catch (const std::invalid_argument&) {
          r.witness_bits = -1;
        }
      }
    }
  } else {
    r.error = 1.0;
  }
  r.success = r.error <= c.epsilon;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

VerifyReport pac_verify(const ExperimentConfig& config) {
  check_config(config);
  VerifyReport report;
  report.trials.resize(std::size_t(config.trials));
  int threads = std::min(config.threads, config.trials);
  if (threads <= 1) {
    for (int i = 0; i < config.trials; ++i)
      report.trials[std::size_t(i)] = run_trial(config, i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors;
    errors.resize(std::size_t(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = t; i < config.trials; i += threads)
            report.trials[std::size_t(i)] = run_trial(config, i);
        } catch (...) {
          errors[std::size_t(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  int successes = 0;
  for (const auto& t : report.trials) successes += t.success ? 1 : 0;
  report.success_rate = double(successes) / double(config.trials);
  return report;
}

// ---------------------------------------------------------------------------
// Application 1

namespace {

std::uint64_t constant_p_bound(double p, double n, double s, double epsilon,
                               double delta) {
  CompressionSpec spec =
      CompressionSpec::poly(0.0, [p](double, double, double) { return p; });
  return kc_bound(spec, n, s, epsilon, delta, true);
}

}  // namespace

App1Report application1_experiment(std::uint64_t s, int n, double epsilon,
                                   double delta, std::size_t num_samples,
                                   bool bound_only, std::uint64_t seed) {
  if (n < 2) throw InputFormatError("window length n must be >= 2");
  if (s < std::uint64_t(n))
    throw InputFormatError("target length s must be >= n");
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw InputFormatError("epsilon and delta must lie in (0,1)");

  App1Report rep;
  rep.bound_only = bound_only;
  rep.s = double(s);
  rep.n = n;
  rep.p_length = 4.0 * double(s);  // 2s symbols at 2 bits each

  if (bound_only) {
    double per_group =
        double(2 * ceil_log2(std::size_t(s)) + ceil_log2(std::size_t(n)));
    rep.p_kc = rep.p_length * per_group / double(n);
  } else {
    if (s > 100000)
      throw InfeasibleError(
          "desk mode materializes the target; use bound-only for s > 100000");
    RngStream rng(seed, 0);
    std::string text;
    text.reserve(std::size_t(s));
    for (std::uint64_t i = 0; i < s; ++i)
      text.push_back(symbol_at(Alphabet::Dna, int(rng.next_below(4))));
    SuperstringRep target{text, n};

    std::vector<std::string> windows;
    std::size_t last = std::size_t(s) - std::size_t(n);
    if (num_samples == 0) {
      // Coverage walk: successive windows overlap by at least n/5, so the
      // greedy merge can chain them into one superstring.
      std::uint64_t max_gap = std::max<std::uint64_t>(1, std::uint64_t(n) * 4 / 5);
      std::size_t pos = 0;
      while (true) {
        windows.push_back(text.substr(pos, std::size_t(n)));
        if (pos >= last) break;
        pos = std::min(last, pos + 1 + std::size_t(rng.next_below(max_gap)));
      }
    } else {
      for (std::size_t i = 0; i < num_samples; ++i) {
        std::size_t pos = std::size_t(rng.next_below(last + 1));
        windows.push_back(text.substr(pos, std::size_t(n)));
      }
    }
    rep.windows = windows.size();
    {
      std::vector<std::string> d(windows);
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      rep.distinct_windows = d.size();
    }

    SuperstringRep hyp = greedy_superstring(windows);
    rep.hypothesis_length = hyp.text.size();
    SuperstringCodeStats stats;
    WitnessCode code =
        encode_superstring_given_target(hyp, target, windows, &stats);
    rep.measured_bits = code.bits.size();
    rep.groups = stats.groups;
    rep.literal_fallback = stats.literal_fallback;
    rep.group_bound_bits =
        superstring_code_bound_bits(stats.groups, std::size_t(s),
                                    std::size_t(n));
    rep.group_budget =
        (2 * hyp.text.size() + std::size_t(n) - 1) / std::size_t(n);
    rep.round_trip =
        decode_superstring_given_target(code, target).text == hyp.text;
    rep.p_kc = double(rep.measured_bits);
  }

  rep.m_length =
      constant_p_bound(rep.p_length, double(n), double(s), epsilon, delta);
  rep.m_kc = constant_p_bound(rep.p_kc, double(n), double(s), epsilon, delta);
  if (is_infinite_samples(rep.m_length) || is_infinite_samples(rep.m_kc))
    throw InfeasibleError("sample bound is INFINITY for these parameters");
  rep.ratio = double(rep.m_length) / double(rep.m_kc);
  return rep;
}

// ---------------------------------------------------------------------------
// Application 2

App2Report application2_experiment(int n, int target_size, double epsilon,
                                   double delta, int trials,
                                   std::uint64_t seed, int threads) {
  if (n < 1 || n > 64)
    throw InputFormatError("application 2 needs n in [1, 64]");
  if (target_size < 0)
    target_size = n - int(std::ceil(std::sqrt(double(n))));
  if (target_size < 0 || target_size > n)
    throw InputFormatError("target size must lie in [0, n]");

  App2Report rep;
  rep.n = n;
  rep.target_size = target_size;
  rep.trials = trials;
  Monomial shape = Monomial::always_true(n);
  for (int i = 0; i < target_size; ++i)
    shape.states[std::size_t(i)] = LiteralState::Positive;
  rep.p_kc = monomial_code_bound_bits(shape);
  rep.p_length = 2 * std::size_t(n);

  rep.m_kc = constant_p_bound(double(std::max<std::size_t>(rep.p_kc, 1)),
                              double(n), double(rep.p_length), epsilon, delta);
  rep.m_length =
      length_based_bound(double(rep.p_length), epsilon, delta, 0.0, 1.0);
  if (is_infinite_samples(rep.m_kc) || is_infinite_samples(rep.m_length))
    throw InfeasibleError("sample bound is INFINITY for these parameters");
  rep.ratio = double(rep.m_length) / double(rep.m_kc);

  ExperimentConfig config;
  config.system = SystemId::Monomial;
  config.learner = "standard";
  config.n = n;
  config.epsilon = epsilon;
  config.delta = delta;
  config.trials = trials;
  config.seed = seed;
  config.threads = threads;
  config.sample_size = rep.m_kc;
  config.target.kind = TargetSpec::Kind::Random;
  config.target.size = target_size;
  config.distribution.kind = DistributionSpec::Kind::PositivesNegatives;
  VerifyReport verify = pac_verify(config);
  rep.success_rate = verify.success_rate;
  rep.trial_results = std::move(verify.trials);
  return rep;
}

}  // namespace occam
