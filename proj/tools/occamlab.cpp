// occamlab: command-line front end for the occam library.
//
// Subcommands: bounds, learn, encode, reduce, verify, vcdim, app1, app2.
// Exit codes: 0 success, 1 internal error, 2 usage, 3 input format,
// 4 infeasible / INFINITY, 5 reduction stage failure. Errors print a
// one-line diagnostic to stderr. Reports go to stdout as CSV (header row,
// LF line endings, '.' decimal separator, 12 significant digits) or, with
// --json, as a single JSON object.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "occam/bounds.hpp"
#include "occam/coding.hpp"
#include "occam/core.hpp"
#include "occam/errors.hpp"
#include "occam/expr.hpp"
#include "occam/harness.hpp"
#include "occam/io.hpp"
#include "occam/learners.hpp"
#include "occam/reductions.hpp"

namespace {

using occam::Example;
using occam::InfeasibleError;
using occam::InputFormatError;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Formatting

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_count(std::uint64_t m) { return occam::sample_count_text(m); }

std::string fmt_bool(bool b) { return b ? "1" : "0"; }

std::string join_csv(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::cout << join_csv(header) << '\n';
  for (const auto& row : rows) std::cout << join_csv(row) << '\n';
}

// JSON value for a sample count; the sentinel renders as the string INFINITY.
json count_json(std::uint64_t m) {
  if (occam::is_infinite_samples(m)) return "INFINITY";
  return m;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

// ---------------------------------------------------------------------------
// Input helpers

std::string trimmed(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool looks_like_fasta(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '>';
  }
  return false;
}

// DNA payload from a file holding either a single FASTA record or raw
// symbols (whitespace ignored).
std::string read_dna_payload(const std::string& path) {
  std::string text = occam::read_text_file(path);
  if (looks_like_fasta(text)) {
    std::istringstream in(text);
    auto records = occam::read_fasta(in);
    if (records.size() != 1)
      throw InputFormatError(path + ": expected a single FASTA record, found " +
                             std::to_string(records.size()));
    return records.front().sequence;
  }
  std::string compact;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    compact += c;
  }
  if (compact.empty()) throw InputFormatError(path + ": no sequence data");
  occam::validate_example(occam::Alphabet::Dna, compact);
  return compact;
}

// Example list from a file: FASTA records or one example per line (blank
// lines skipped). An empty file yields an empty list.
std::vector<Example> read_example_list(const std::string& path) {
  std::string text = occam::read_text_file(path);
  std::vector<Example> out;
  if (looks_like_fasta(text)) {
    std::istringstream in(text);
    for (auto& record : occam::read_fasta(in))
      out.push_back(std::move(record.sequence));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

occam::Maj3Fn threshold_maj3() {
  return [](const occam::Representation& a, const occam::Representation& b,
            const occam::Representation& c) -> occam::Representation {
    return occam::maj3_threshold(std::get<occam::ThresholdCircuit>(a),
                                 std::get<occam::ThresholdCircuit>(b),
                                 std::get<occam::ThresholdCircuit>(c));
  };
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOpts {
  double epsilon = 0.0, delta = 0.0;
  double n = 1.0, s = 1.0;
  std::uint64_t d = 0;
  double class_size = 0.0;
  double alpha = 0.0, beta = 1.0;
  std::string p_expr;
  bool deterministic = false;
  bool json_out = false;
  bool has_d = false, has_class = false, has_s = false, has_p = false;
};

int run_bounds(const BoundsOpts& o) {
  if (!o.has_d && !o.has_class && !o.has_s && !o.has_p)
    return usage_error(
        "no bound requested: pass --d, --class-size, --s, or --p-expr");

  occam::BoundReport r;
  r.epsilon = o.epsilon;
  r.delta = o.delta;
  r.n = o.n;
  r.s = o.s;
  if (o.has_d) {
    r.vc_upper = occam::vc_upper_bound(o.d, o.epsilon, o.delta);
    r.vc_lower = occam::vc_lower_bound(o.d, o.epsilon, o.delta);
  }
  if (o.has_class)
    r.finite_class = occam::finite_class_bound(o.class_size, o.epsilon, o.delta);
  if (o.has_s)
    r.length_based =
        occam::length_based_bound(o.s, o.epsilon, o.delta, o.alpha, o.beta);
  if (o.has_p) {
    auto p = occam::compile_expression(o.p_expr);
    auto spec = occam::CompressionSpec::poly(o.alpha, p);
    r.kc = occam::kc_bound(spec, o.n, o.s, o.epsilon, o.delta, o.deterministic);
  }

  auto cell = [](const std::optional<std::uint64_t>& v) {
    return v ? fmt_count(*v) : std::string();
  };
  bool infinite = false;
  for (const auto& v : {r.vc_upper, r.vc_lower, r.finite_class, r.length_based,
                        r.kc})
    if (v && occam::is_infinite_samples(*v)) infinite = true;

  if (o.json_out) {
    json out{{"epsilon", r.epsilon},
             {"delta", r.delta},
             {"n", r.n},
             {"s", r.s}};
    if (r.vc_upper) out["vc_upper"] = count_json(*r.vc_upper);
    if (r.vc_lower) out["vc_lower"] = count_json(*r.vc_lower);
    if (r.finite_class) out["finite_class"] = count_json(*r.finite_class);
    if (r.length_based) out["length_based"] = count_json(*r.length_based);
    if (r.kc) out["kc"] = count_json(*r.kc);
    std::cout << out.dump(2) << '\n';
  } else {
    print_csv({"epsilon", "delta", "n", "s", "vc_upper", "vc_lower",
               "finite_class", "length_based", "kc"},
              {{fmt(r.epsilon), fmt(r.delta), fmt(r.n), fmt(r.s),
                cell(r.vc_upper), cell(r.vc_lower), cell(r.finite_class),
                cell(r.length_based), cell(r.kc)}});
    std::cout << '\n';
    auto row = [](const std::string& name, const std::string& value) {
      std::printf("  %-14s %s\n", name.c_str(), value.c_str());
    };
    row("epsilon", fmt(r.epsilon));
    row("delta", fmt(r.delta));
    if (r.vc_upper) row("vc_upper", fmt_count(*r.vc_upper));
    if (r.vc_lower) row("vc_lower", fmt_count(*r.vc_lower));
    if (r.finite_class) row("finite_class", fmt_count(*r.finite_class));
    if (r.length_based) row("length_based", fmt_count(*r.length_based));
    if (r.kc) row("kc", fmt_count(*r.kc));
  }

  if (infinite) {
    std::cerr << "error: requested bound is INFINITY "
                 "(no finite sample size exists)\n";
    return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// learn

struct LearnOpts {
  std::string algo;
  std::string sample_path;
  int n = 0;
  bool json_out = false;
};

int run_learn(const LearnOpts& o) {
  occam::Representation rep;
  if (o.algo == "standard" || o.algo == "haussler") {
    if (o.n < 1)
      return usage_error("--n is required for monomial learners");
    auto sample =
        occam::read_sample_file(o.sample_path, occam::Alphabet::Binary);
    rep = o.algo == "standard"
              ? occam::standard_monomial_learn(sample, o.n)
              : occam::haussler_monomial_learn(sample, o.n);
  } else if (o.algo == "greedy-sss") {
    auto records = occam::read_fasta_file(o.sample_path);
    std::vector<std::string> windows;
    for (auto& r : records) windows.push_back(std::move(r.sequence));
    rep = occam::greedy_superstring(windows);
  } else {
    return usage_error("unknown --algo '" + o.algo +
                       "' (expected standard, haussler, or greedy-sss)");
  }

  std::string text = occam::to_text(rep);
  std::size_t bits = occam::representation_length_bits(rep);
  if (o.json_out) {
    json out{{"algo", o.algo}, {"representation", text}, {"bits", bits}};
    std::cout << out.dump(2) << '\n';
  } else {
    print_csv({"algo", "representation", "bits"},
              {{o.algo, text, std::to_string(bits)}});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOpts {
  std::string codec;
  std::string hypothesis_path;
  std::string target_path;
  std::string examples_path;
  std::string exceptions_path;
  std::string alphabet = "binary";
  std::string emit_path;
  int n = 0;
  bool json_out = false;
};

int run_encode(const EncodeOpts& o) {
  occam::WitnessCode code;
  std::size_t bound = 0;
  std::optional<std::size_t> groups;
  std::optional<bool> fallback;

  if (o.codec == "monomial") {
    if (o.n < 1) return usage_error("--n is required for the monomial codec");
    if (o.target_path.empty())
      return usage_error("--target is required for the monomial codec");
    auto hypothesis = occam::parse_monomial(
        trimmed(occam::read_text_file(o.hypothesis_path)), o.n);
    auto target = occam::parse_monomial(
        trimmed(occam::read_text_file(o.target_path)), o.n);
    code = occam::encode_monomial_given_target(hypothesis, target);
    bound = occam::monomial_code_bound_bits(target);
  } else if (o.codec == "superstring") {
    if (o.n < 1)
      return usage_error("--n (window length) is required for the "
                         "superstring codec");
    if (o.target_path.empty())
      return usage_error("--target is required for the superstring codec");
    occam::SuperstringRep hypothesis{read_dna_payload(o.hypothesis_path), o.n};
    occam::SuperstringRep target{read_dna_payload(o.target_path), o.n};
    if (hypothesis.text.size() < std::size_t(o.n))
      throw InputFormatError("hypothesis is shorter than the window length");
    std::vector<Example> examples;
    if (!o.examples_path.empty()) {
      examples = read_example_list(o.examples_path);
    } else {
      // Default: windows of the hypothesis at half-window stride, plus the
      // final window, so every position is covered.
      std::size_t len = hypothesis.text.size();
      std::size_t step = std::max<std::size_t>(1, std::size_t(o.n) / 2);
      for (std::size_t pos = 0; pos + std::size_t(o.n) <= len; pos += step)
        examples.push_back(hypothesis.text.substr(pos, std::size_t(o.n)));
      Example last = hypothesis.text.substr(len - std::size_t(o.n));
      if (examples.empty() || examples.back() != last)
        examples.push_back(std::move(last));
    }
    occam::SuperstringCodeStats stats;
    code = occam::encode_superstring_given_target(hypothesis, target, examples,
                                                 &stats);
    std::size_t budget =
        (2 * hypothesis.text.size() + std::size_t(o.n) - 1) / std::size_t(o.n);
    bound = occam::superstring_code_bound_bits(budget, target.text.size(),
                                               std::size_t(o.n));
    groups = stats.groups;
    fallback = stats.literal_fallback;
  } else if (o.codec == "transcript") {
    if (o.n < 1) return usage_error("--n is required for the transcript codec");
    occam::Alphabet alphabet = occam::parse_alphabet(o.alphabet);
    occam::Transcript transcript;
    transcript.fed = read_example_list(o.hypothesis_path);
    if (!o.exceptions_path.empty())
      transcript.exceptions = read_example_list(o.exceptions_path);
    code = occam::encode_examples_transcript(transcript, alphabet, o.n);
    bound = occam::transcript_code_bits(transcript, alphabet, o.n);
  } else {
    return usage_error("unknown --codec '" + o.codec +
                       "' (expected monomial, superstring, or transcript)");
  }

  if (!o.emit_path.empty()) occam::write_bits_file(o.emit_path, code.bits);

  if (o.json_out) {
    json out{{"codec", o.codec},
             {"bits", code.bits.size()},
             {"bound", bound},
             {"conditioning", code.conditioning}};
    if (groups) out["groups"] = *groups;
    if (fallback) out["literal_fallback"] = *fallback;
    std::cout << out.dump(2) << '\n';
  } else {
    print_csv({"codec", "bits", "bound", "groups", "literal_fallback"},
              {{o.codec, std::to_string(code.bits.size()),
                std::to_string(bound),
                groups ? std::to_string(*groups) : std::string(),
                fallback ? fmt_bool(*fallback) : std::string()}});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceOpts {
  int theorem = 0;
  std::string system;
  std::string sample_path;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  int retries = 0;
  bool json_out = false;
};

int run_reduce(const ReduceOpts& o) {
  if (o.theorem != 2 && o.theorem != 3)
    return usage_error("--theorem must be 2 or 3");
  occam::SystemId system = occam::parse_system(o.system);
  if (system != occam::SystemId::Monomial &&
      system != occam::SystemId::Threshold)
    return usage_error("--system must be monomial or threshold");

  auto sample =
      occam::read_sample_file(o.sample_path, occam::system_alphabet(system));
  if (sample.empty()) throw InputFormatError("sample file has no examples");
  int n = int(sample.items().front().value.size());
  double s = 2.0 * n;

  occam::PacLearner learner =
      system == occam::SystemId::Monomial
          ? occam::make_standard_monomial_learner()
          : occam::make_bruteforce_threshold_learner(
                occam::CircuitEnvelope{n, 1, 3, -2, 2});

  if (o.theorem == 2) {
    auto result =
        occam::theorem2_occam(learner, sample, n, s, o.gamma, o.seed);
    if (o.json_out) {
      json out{{"theorem", 2},
               {"consistent", result.consistent},
               {"witness_bits", result.witness.bits.size()},
               {"compression", result.compression},
               {"epsilon0", result.epsilon0},
               {"fed", result.fed_count},
               {"exceptions", result.exceptions.size()},
               {"side_condition", result.side_condition}};
      std::cout << out.dump(2) << '\n';
    } else {
      print_csv({"theorem", "consistent", "witness_bits", "compression",
                 "epsilon0", "fed", "exceptions", "side_condition"},
                {{"2", fmt_bool(result.consistent),
                  std::to_string(result.witness.bits.size()),
                  fmt(result.compression), fmt(result.epsilon0),
                  fmt_count(result.fed_count),
                  std::to_string(result.exceptions.size()),
                  fmt_bool(result.side_condition)}});
    }
    return 0;
  }

  if (system != occam::SystemId::Threshold)
    throw InfeasibleError(
        "the three-stage majority construction needs a system closed under "
        "majority vote; monomials are not (use --system threshold)");
  auto result = occam::theorem3_occam(learner, threshold_maj3(), sample, n, s,
                                      o.gamma, o.seed, o.retries);
  if (o.json_out) {
    json out{{"theorem", 3},
             {"consistent", result.consistent},
             {"witness_bits", result.witness.bits.size()},
             {"compression", result.compression},
             {"epsilon", result.epsilon},
             {"delta", result.delta},
             {"per_stage", count_json(result.per_stage)},
             {"e1", result.e1.size()},
             {"e2", result.e2.size()},
             {"attempts", result.attempts},
             {"success", result.success},
             {"failed_stage", result.failed_stage},
             {"disjoint", result.disjoint}};
    std::cout << out.dump(2) << '\n';
  } else {
    print_csv(
        {"theorem", "consistent", "witness_bits", "compression", "epsilon",
         "delta", "per_stage", "e1", "e2", "attempts", "success",
         "failed_stage", "disjoint"},
        {{"3", fmt_bool(result.consistent),
          std::to_string(result.witness.bits.size()), fmt(result.compression),
          fmt(result.epsilon), fmt(result.delta), fmt_count(result.per_stage),
          std::to_string(result.e1.size()), std::to_string(result.e2.size()),
          std::to_string(result.attempts), fmt_bool(result.success),
          std::to_string(result.failed_stage), fmt_bool(result.disjoint)}});
  }
  if (!result.success) {
    std::cerr << "error: stage " << result.failed_stage
              << " exceeded its error budget after " << result.attempts
              << " attempt(s)\n";
    return 5;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string config_path;
  int threads = 0;  // 0 = use the config's value
  bool json_out = false;
};

json trial_json(const occam::TrialResult& t) {
  return json{{"trial", t.trial},
              {"m", count_json(t.m)},
              {"error", t.error},
              {"success", t.success},
              {"witness_bits", t.witness_bits}};
}

std::vector<std::string> trial_cells(const occam::TrialResult& t,
                                     std::size_t tail_blanks) {
  std::vector<std::string> cells{"trial", std::to_string(t.trial),
                                 fmt_count(t.m), fmt(t.error),
                                 fmt_bool(t.success),
                                 std::to_string(t.witness_bits)};
  cells.insert(cells.end(), tail_blanks, std::string());
  return cells;
}

int run_verify(const VerifyOpts& o) {
  auto config =
      occam::parse_experiment_config(occam::read_text_file(o.config_path));
  if (o.threads > 0) config.threads = o.threads;
  auto report = occam::pac_verify(config);

  if (o.json_out) {
    json trials = json::array();
    for (const auto& t : report.trials) trials.push_back(trial_json(t));
    json out{{"success_rate", report.success_rate}, {"trials", trials}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : report.trials) rows.push_back(trial_cells(t, 1));
    rows.push_back({"summary", "", "", "", "", "",
                    fmt(report.success_rate)});
    print_csv({"kind", "trial", "m", "error", "success", "witness_bits",
               "success_rate"},
              rows);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// vcdim

struct VcdimOpts {
  std::string system = "monomial";
  int n = 0;
  bool json_out = false;
};

int run_vcdim(const VcdimOpts& o) {
  if (o.n < 1) return usage_error("--n must be at least 1");
  occam::SystemId system = occam::parse_system(o.system);
  auto domain = occam::full_domain(occam::system_alphabet(system), o.n);
  int d = occam::vc_dim_bruteforce(system, o.n, domain);
  if (o.json_out) {
    json out{{"system", occam::system_name(system)}, {"n", o.n}, {"d", d}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << d << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// app1

struct App1Opts {
  double s = 0.0;
  int n = 0;
  double epsilon = 0.1, delta = 0.1;
  std::size_t num_samples = 0;
  bool bound_only = false;
  std::uint64_t seed = 0;
  bool json_out = false;
};

int run_app1(const App1Opts& o) {
  if (!(o.s >= 2.0) || !std::isfinite(o.s) || o.s > 9e18)
    return usage_error("--s must be a length in [2, 9e18]");
  auto report = occam::application1_experiment(
      std::uint64_t(std::llround(o.s)), o.n, o.epsilon, o.delta, o.num_samples,
      o.bound_only, o.seed);

  if (o.json_out) {
    json out{{"bound_only", report.bound_only},
             {"s", report.s},
             {"n", report.n},
             {"p_length", report.p_length},
             {"p_kc", report.p_kc},
             {"m_length", count_json(report.m_length)},
             {"m_kc", count_json(report.m_kc)},
             {"ratio", report.ratio}};
    if (!report.bound_only) {
      out["windows"] = report.windows;
      out["distinct_windows"] = report.distinct_windows;
      out["hypothesis_length"] = report.hypothesis_length;
      out["groups"] = report.groups;
      out["measured_bits"] = report.measured_bits;
      out["group_bound_bits"] = report.group_bound_bits;
      out["group_budget"] = report.group_budget;
      out["round_trip"] = report.round_trip;
      out["literal_fallback"] = report.literal_fallback;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::vector<std::string> row{
        fmt_bool(report.bound_only), fmt(report.s), std::to_string(report.n),
        fmt(report.p_length),        fmt(report.p_kc),
        fmt_count(report.m_length),  fmt_count(report.m_kc),
        fmt(report.ratio)};
    if (report.bound_only) {
      row.insert(row.end(), 9, std::string());
    } else {
      for (std::size_t v : {report.windows, report.distinct_windows,
                            report.hypothesis_length, report.groups,
                            report.measured_bits, report.group_bound_bits,
                            report.group_budget})
        row.push_back(std::to_string(v));
      row.push_back(fmt_bool(report.round_trip));
      row.push_back(fmt_bool(report.literal_fallback));
    }
    print_csv({"bound_only", "s", "n", "p_length", "p_kc", "m_length", "m_kc",
               "ratio", "windows", "distinct_windows", "hypothesis_length",
               "groups", "measured_bits", "group_bound_bits", "group_budget",
               "round_trip", "literal_fallback"},
              {row});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// app2

struct App2Opts {
  int n = 0;
  int target_size = -1;
  double epsilon = 0.1, delta = 0.1;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;
  bool json_out = false;
};

int run_app2(const App2Opts& o) {
  auto report = occam::application2_experiment(
      o.n, o.target_size, o.epsilon, o.delta, o.trials, o.seed, o.threads);

  if (o.json_out) {
    json trials = json::array();
    for (const auto& t : report.trial_results) trials.push_back(trial_json(t));
    json out{{"n", report.n},
             {"target_size", report.target_size},
             {"p_kc", report.p_kc},
             {"p_length", report.p_length},
             {"m_kc", count_json(report.m_kc)},
             {"m_length", count_json(report.m_length)},
             {"ratio", report.ratio},
             {"success_rate", report.success_rate},
             {"trials", trials}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : report.trial_results)
      rows.push_back(trial_cells(t, 8));
    rows.push_back({"summary", "", "", "", "", "", std::to_string(report.n),
                    std::to_string(report.target_size),
                    std::to_string(report.p_kc),
                    std::to_string(report.p_length), fmt_count(report.m_kc),
                    fmt_count(report.m_length), fmt(report.ratio),
                    fmt(report.success_rate)});
    print_csv({"kind", "trial", "m", "error", "success", "witness_bits", "n",
               "target_size", "p_kc", "p_length", "m_kc", "m_length", "ratio",
               "success_rate"},
              rows);
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "occamlab: Occam sample bounds, learners, witness codes, and "
      "learning-to-compression reductions"};
  app.require_subcommand(1);

  BoundsOpts bo;
  auto* bounds = app.add_subcommand(
      "bounds", "Evaluate PAC sample bounds from closed-form parameters");
  bounds->add_option("--epsilon", bo.epsilon, "Accuracy parameter")->required();
  bounds->add_option("--delta", bo.delta, "Confidence parameter")->required();
  bounds->add_option("--n", bo.n, "Instance dimension (default 1)");
  auto* bo_s = bounds->add_option(
      "--s", bo.s, "Target description length; enables the length-based bound");
  auto* bo_d = bounds->add_option(
      "--d", bo.d, "VC dimension; enables the VC upper/lower bounds");
  auto* bo_class = bounds->add_option(
      "--class-size", bo.class_size,
      "Concept-class cardinality; enables the finite-class bound");
  bounds->add_option("--alpha", bo.alpha,
                     "Compression exponent in [0,1) (default 0)");
  bounds->add_option("--beta", bo.beta,
                     "Length-based exponent p = s^beta (default 1)");
  auto* bo_p = bounds->add_option(
      "--p-expr", bo.p_expr,
      "Polynomial p(n,s,g) for the compression-based bound, e.g. \"4\" or "
      "\"n*log2(s)\"");
  bounds->add_flag("--deterministic", bo.deterministic,
                   "Deterministic-learner variant of the compression bound");
  bounds->add_flag("--json", bo.json_out, "Emit a JSON object instead of CSV");

  LearnOpts lo;
  auto* learn =
      app.add_subcommand("learn", "Run a learner on a sample or read file");
  learn->add_option("--algo", lo.algo,
                    "Learner: standard | haussler | greedy-sss")
      ->required();
  learn
      ->add_option("--sample", lo.sample_path,
                   "Labeled sample file (monomial learners) or FASTA reads "
                   "(greedy-sss)")
      ->required();
  learn->add_option("--n", lo.n, "Variable count (monomial learners)");
  learn->add_flag("--json", lo.json_out, "Emit a JSON object instead of CSV");

  EncodeOpts eo;
  auto* encode = app.add_subcommand(
      "encode", "Produce a witness code for a hypothesis given a target");
  encode->add_option("--codec", eo.codec,
                     "Codec: monomial | superstring | transcript")
      ->required();
  encode
      ->add_option("--hypothesis", eo.hypothesis_path,
                   "Hypothesis file (monomial text, DNA/FASTA, or transcript "
                   "fed-example lines)")
      ->required();
  encode->add_option("--target", eo.target_path,
                     "Target file (monomial and superstring codecs)");
  encode->add_option("--n", eo.n,
                     "Variable count, window length, or example length");
  encode->add_option("--examples", eo.examples_path,
                     "Superstring codec: example windows (default: hypothesis "
                     "windows at half-window stride)");
  encode->add_option("--exceptions", eo.exceptions_path,
                     "Transcript codec: exception-example lines");
  encode->add_option("--alphabet", eo.alphabet,
                     "Transcript codec alphabet: binary | dna (default binary)");
  encode->add_option("--emit", eo.emit_path,
                     "Write the witness bit string to this file");
  encode->add_flag("--json", eo.json_out, "Emit a JSON object instead of CSV");

  ReduceOpts ro;
  auto* reduce = app.add_subcommand(
      "reduce", "Run a learning-to-compression reduction on a sample");
  reduce->add_option("--theorem", ro.theorem, "Construction: 2 | 3")
      ->required();
  reduce->add_option("--system", ro.system, "System: monomial | threshold")
      ->required();
  reduce->add_option("--sample", ro.sample_path, "Labeled sample file")
      ->required();
  reduce->add_option("--gamma", ro.gamma, "Failure-rate budget in (0,1)")
      ->required();
  reduce->add_option("--seed", ro.seed, "Stream seed (default 0)");
  reduce->add_option("--retries", ro.retries,
                     "Per-stage retry budget, theorem 3 (default 0)");
  reduce->add_flag("--json", ro.json_out, "Emit a JSON object instead of CSV");

  VerifyOpts vo;
  auto* verify = app.add_subcommand(
      "verify", "Run a PAC verification experiment from a JSON config");
  verify->add_option("--config", vo.config_path, "Experiment config (JSON)")
      ->required();
  verify->add_option("--threads", vo.threads,
                     "Override the config's trial parallelism");
  verify->add_flag("--json", vo.json_out, "Emit a JSON object instead of CSV");

  VcdimOpts vco;
  auto* vcdim =
      app.add_subcommand("vcdim", "Brute-force VC dimension of a small class");
  vcdim->add_option("--system", vco.system, "System (default monomial)");
  vcdim->add_option("--n", vco.n, "Variable count")->required();
  vcdim->add_flag("--json", vco.json_out, "Emit a JSON object instead of CSV");

  App1Opts a1;
  auto* app1 = app.add_subcommand(
      "app1", "Superstring description-length experiment (bounds or desk run)");
  app1->add_option("--s", a1.s, "Target sequence length (e.g. 3e9)")
      ->required();
  app1->add_option("--n", a1.n, "Read/window length")->required();
  app1->add_option("--epsilon", a1.epsilon, "Accuracy (default 0.1)");
  app1->add_option("--delta", a1.delta, "Confidence (default 0.1)");
  app1->add_option("--num-samples", a1.num_samples,
                   "Desk mode: windows to draw (0 = coverage walk)");
  app1->add_flag("--bound-only", a1.bound_only,
                 "Skip the desk run; evaluate the formulas only");
  app1->add_option("--seed", a1.seed, "Stream seed (default 0)");
  app1->add_flag("--json", a1.json_out, "Emit a JSON object instead of CSV");

  App2Opts a2;
  auto* app2 = app.add_subcommand(
      "app2", "Conjunction-learning comparison at the witness-code bound");
  app2->add_option("--n", a2.n, "Variable count")->required();
  app2->add_option("--target-size", a2.target_size,
                   "Literals in the target (default n - ceil(sqrt(n)))");
  app2->add_option("--epsilon", a2.epsilon, "Accuracy (default 0.1)");
  app2->add_option("--delta", a2.delta, "Confidence (default 0.1)");
  app2->add_option("--trials", a2.trials, "Trial count (default 200)");
  app2->add_option("--seed", a2.seed, "Stream seed (default 0)");
  app2->add_option("--threads", a2.threads, "Trial parallelism (default 1)");
  app2->add_flag("--json", a2.json_out, "Emit a JSON object instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    bo.has_d = bo_d->count() > 0;
    bo.has_class = bo_class->count() > 0;
    bo.has_s = bo_s->count() > 0;
    bo.has_p = bo_p->count() > 0;
    if (bounds->parsed()) return run_bounds(bo);
    if (learn->parsed()) return run_learn(lo);
    if (encode->parsed()) return run_encode(eo);
    if (reduce->parsed()) return run_reduce(ro);
    if (verify->parsed()) return run_verify(vo);
    if (vcdim->parsed()) return run_vcdim(vco);
    if (app1->parsed()) return run_app1(a1);
    if (app2->parsed()) return run_app2(a2);
    return usage_error("no subcommand given");
  } catch (const InputFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
