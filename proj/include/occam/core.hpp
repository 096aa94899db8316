#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "occam/bits.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// Alphabets and examples

enum class Alphabet { Binary, Dna };

int bits_per_symbol(Alphabet a);
bool symbol_valid(Alphabet a, char c);
int symbol_index(Alphabet a, char c);
char symbol_at(Alphabet a, int index);
const char* alphabet_name(Alphabet a);
Alphabet parse_alphabet(const std::string& name);

using Example = std::string;

// Throws InputFormatError unless every symbol belongs to the alphabet.
void validate_example(Alphabet a, const Example& x);

// ---------------------------------------------------------------------------
// Representation systems

enum class LiteralState : std::uint8_t { Absent, Positive, Negative, Both };

// Conjunction of literals over x1..xn. A variable in state Both makes the
// monomial unsatisfiable; the canonical always-false concept.
struct Monomial {
  std::vector<LiteralState> states;

  static Monomial always_true(int n) {
    return Monomial{std::vector<LiteralState>(std::size_t(n),
                                              LiteralState::Absent)};
  }
  static Monomial all_literals(int n) {
    return Monomial{std::vector<LiteralState>(std::size_t(n),
                                              LiteralState::Both)};
  }

  int n() const { return int(states.size()); }
  bool has_both() const;
  int literal_count() const;  // variables not Absent; Both counts once
  bool accepts(const Example& x) const;
  // True when every literal of `other` also appears in *this.
  bool contains_literals_of(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

std::string to_text(const Monomial& m);
Monomial parse_monomial(const std::string& text, int n);

// Disjunction of Both-free monomials.
struct DnfFormula {
  int n = 0;
  std::vector<Monomial> terms;

  int width() const;  // largest term, 0 when empty
  bool accepts(const Example& x) const;

  bool operator==(const DnfFormula&) const = default;
};

std::string to_text(const DnfFormula& f);

// Linear threshold gate: fires when sum(weight_i * input_i) >= threshold.
struct ThresholdGate {
  int id = 0;
  std::vector<std::int64_t> weights;
  std::int64_t threshold = 0;
  std::vector<int> inputs;  // 0..n-1 are variables, >= n are earlier gates

  bool operator==(const ThresholdGate&) const = default;
};

struct ThresholdCircuit {
  int n = 0;
  std::vector<ThresholdGate> gates;  // ids strictly increasing from n
  int output_id = 0;

  void validate() const;  // invalid_argument when the wiring is not acyclic
  bool eval(const Example& x) const;

  bool operator==(const ThresholdCircuit&) const = default;
};

std::string to_text(const ThresholdCircuit& c);

// String over the DNA alphabet; the concept is the set of its length-`window`
// substrings.
struct SuperstringRep {
  std::string text;
  int window = 0;

  bool contains(const Example& x) const;

  bool operator==(const SuperstringRep&) const = default;
};

std::string to_text(const SuperstringRep& r);

using Representation =
    std::variant<Monomial, DnfFormula, ThresholdCircuit, SuperstringRep>;

enum class SystemId { Monomial, KDnf, Threshold, Superstring };

const char* system_name(SystemId id);
SystemId parse_system(const std::string& name);
Alphabet system_alphabet(SystemId id);
SystemId system_of(const Representation& rep);
int dimension_of(const Representation& rep);  // n, or window for superstrings

bool evaluate(const Representation& rep, const Example& x);
std::string to_text(const Representation& rep);

// Canonical self-delimiting encodings; length_bits matches encode exactly.
std::size_t representation_length_bits(const Representation& rep);
BitString encode_representation(const Representation& rep);
Representation decode_representation(SystemId id, const BitString& bits, int n);

// ---------------------------------------------------------------------------
// Samples

struct LabeledExample {
  Example value;
  bool label = false;

  bool operator==(const LabeledExample&) const = default;
};

// Multiset of labeled examples. Conflicting labels for one value are rejected.
class LabeledSample {
 public:
  LabeledSample() = default;
  explicit LabeledSample(std::vector<LabeledExample> items);

  const std::vector<LabeledExample>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  // Distinct values in first-occurrence order.
  const std::vector<LabeledExample>& distinct() const { return distinct_; }
  std::size_t distinct_count() const { return distinct_.size(); }
  std::size_t multiplicity(const Example& x) const;
  std::optional<bool> label_of(const Example& x) const;

 private:
  std::vector<LabeledExample> items_;
  std::vector<LabeledExample> distinct_;
  std::unordered_map<Example, std::pair<bool, std::size_t>> index_;
};

// Fraction of the sample (with multiplicity) the representation mislabels.
double sample_error(const Representation& rep, const LabeledSample& sample);
bool consistent_with(const Representation& rep, const LabeledSample& sample);

// ---------------------------------------------------------------------------
// Distributions and example oracles

class FiniteDistribution {
 public:
  FiniteDistribution(std::vector<Example> support, std::vector<double> probs);
  static FiniteDistribution uniform(std::vector<Example> support);

  const std::vector<Example>& support() const { return support_; }
  const std::vector<double>& probabilities() const { return probs_; }
  double mass_where(const std::function<bool(const Example&)>& pred) const;
  // Maps a uniform unit draw to a support point via the cumulative table.
  const Example& pick(double unit) const;

 private:
  std::vector<Example> support_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

// Counter-based splittable generator; identical streams on every platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double next_unit();  // [0, 1)
  std::uint64_t next_below(std::uint64_t bound);
  RngStream split(std::uint64_t substream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

class Oracle {
 public:
  Oracle(FiniteDistribution dist, Representation target, RngStream stream);

  LabeledExample draw();
  std::vector<LabeledExample> draw_many(std::size_t count);
  const FiniteDistribution& distribution() const { return dist_; }
  const Representation& target() const { return target_; }

 private:
  FiniteDistribution dist_;
  Representation target_;
  RngStream stream_;
};

// Probability mass where the two representations disagree.
double symmetric_difference_error(const Representation& a,
                                  const Representation& b,
                                  const FiniteDistribution& dist);

// ---------------------------------------------------------------------------
// Concept-class enumeration

std::uint64_t pow3(int n);
// 3^n polarity assignments plus the canonical always-false concept.
std::uint64_t monomial_class_size(int n);
Monomial monomial_by_index(std::uint64_t index, int n);

Monomial random_monomial(int n, RngStream& rng);
Monomial random_monomial_of_size(int n, int literals, RngStream& rng);

struct CircuitEnvelope {
  int n = 0;
  int max_gates = 1;
  int max_degree = 3;
  std::int64_t weight_min = -2;  // zero weights are excluded
  std::int64_t weight_max = 2;
};

// Visits every circuit in the envelope in a fixed order; the callback returns
// false to stop early. Returns the number of circuits visited.
std::uint64_t for_each_circuit(
    const CircuitEnvelope& env,
    const std::function<bool(const ThresholdCircuit&)>& visit);
std::uint64_t circuit_class_size(const CircuitEnvelope& env);

// All strings of the given length, lexicographic order. Guarded to 2^20.
std::vector<Example> full_domain(Alphabet a, int length);

}  // namespace occam
