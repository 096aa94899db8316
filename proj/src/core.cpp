#include "occam/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "occam/errors.hpp"

namespace occam {

// ---------------------------------------------------------------------------
// Alphabets

int bits_per_symbol(Alphabet a) { return a == Alphabet::Binary ? 1 : 2; }

namespace {
constexpr const char kDnaSymbols[] = "ACGT";
constexpr const char kBinarySymbols[] = "01";
}  // namespace

bool symbol_valid(Alphabet a, char c) {
  if (a == Alphabet::Binary) return c == '0' || c == '1';
  return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

int symbol_index(Alphabet a, char c) {
  const char* table = a == Alphabet::Binary ? kBinarySymbols : kDnaSymbols;
  const char* p = std::strchr(table, c);
  if (!p || !c) throw InputFormatError(std::string("symbol '") + c +
                                       "' not in alphabet " +
                                       alphabet_name(a));
  return int(p - table);
}

char symbol_at(Alphabet a, int index) {
  const char* table = a == Alphabet::Binary ? kBinarySymbols : kDnaSymbols;
  int size = a == Alphabet::Binary ? 2 : 4;
  if (index < 0 || index >= size)
    throw std::invalid_argument("symbol index out of range");
  return table[index];
}

const char* alphabet_name(Alphabet a) {
  return a == Alphabet::Binary ? "binary" : "dna";
}

Alphabet parse_alphabet(const std::string& name) {
  if (name == "binary") return Alphabet::Binary;
  if (name == "dna") return Alphabet::Dna;
  throw InputFormatError("unknown alphabet: " + name);
}

void validate_example(Alphabet a, const Example& x) {
  for (char c : x) {
    if (!symbol_valid(a, c))
      throw InputFormatError(std::string("example symbol '") + c +
                             "' not in alphabet " + alphabet_name(a));
  }
}

// ---------------------------------------------------------------------------
// Monomials

bool Monomial::has_both() const {
  return std::find(states.begin(), states.end(), LiteralState::Both) !=
         states.end();
}

int Monomial::literal_count() const {
  return int(std::count_if(states.begin(), states.end(), [](LiteralState s) {
    return s != LiteralState::Absent;
  }));
}

bool Monomial::accepts(const Example& x) const {
  if (x.size() != states.size())
    throw std::invalid_argument("example length does not match monomial arity");
  for (std::size_t i = 0; i < states.size(); ++i) {
    switch (states[i]) {
      case LiteralState::Absent:
        break;
      case LiteralState::Positive:
        if (x[i] != '1') return false;
        break;
      case LiteralState::Negative:
        if (x[i] != '0') return false;
        break;
      case LiteralState::Both:
        return false;
    }
  }
  return true;
}

bool Monomial::contains_literals_of(const Monomial& other) const {
  if (states.size() != other.states.size())
    throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t i = 0; i < states.size(); ++i) {
    LiteralState mine = states[i], theirs = other.states[i];
    if (theirs == LiteralState::Absent) continue;
    if (mine == theirs || mine == LiteralState::Both) continue;
    return false;
  }
  return true;
}

std::string to_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    LiteralState s = m.states[i];
    if (s == LiteralState::Absent) continue;
    std::string var = "x" + std::to_string(i + 1);
    if (s == LiteralState::Positive || s == LiteralState::Both) {
      if (!out.empty()) out += "&";
      out += var;
    }
    if (s == LiteralState::Negative || s == LiteralState::Both) {
      if (!out.empty()) out += "&";
      out += "!" + var;
    }
  }
  return out.empty() ? "true" : out;
}

Monomial parse_monomial(const std::string& text, int n) {
  Monomial m = Monomial::always_true(n);
  if (text == "true") return m;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '&')) {
    // Trim surrounding spaces.
    std::size_t b = token.find_first_not_of(' ');
    std::size_t e = token.find_last_not_of(' ');
    if (b == std::string::npos)
      throw InputFormatError("empty literal in monomial: " + text);
    token = token.substr(b, e - b + 1);
    bool negated = false;
    if (token[0] == '!') {
      negated = true;
      token = token.substr(1);
    }
    if (token.size() < 2 || token[0] != 'x' ||
        token.find_first_not_of("0123456789", 1) != std::string::npos)
      throw InputFormatError("bad literal '" + token + "' in monomial");
    long idx = std::stol(token.substr(1));
    if (idx < 1 || idx > n)
      throw InputFormatError("variable index out of range in monomial: " +
                             token);
    LiteralState& s = m.states[std::size_t(idx - 1)];
    LiteralState want =
        negated ? LiteralState::Negative : LiteralState::Positive;
    if (s == LiteralState::Absent)
      s = want;
    else if (s != want)
      s = LiteralState::Both;
  }
  return m;
}

// ---------------------------------------------------------------------------
// DNF

int DnfFormula::width() const {
  int w = 0;
  for (const auto& t : terms) w = std::max(w, t.literal_count());
  return w;
}

bool DnfFormula::accepts(const Example& x) const {
  if (int(x.size()) != n)
    throw std::invalid_argument("example length does not match formula arity");
  for (const auto& t : terms) {
    if (t.accepts(x)) return true;
  }
  return false;
}

std::string to_text(const DnfFormula& f) {
  if (f.terms.empty()) return "false";
  std::string out;
  for (const auto& t : f.terms) {
    if (!out.empty()) out += " | ";
    out += to_text(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Threshold circuits

void ThresholdCircuit::validate() const {
  int prev = n - 1;
  for (const auto& g : gates) {
    if (g.id <= prev)
      throw std::invalid_argument("gate ids must increase starting at n");
    if (g.weights.size() != g.inputs.size() || g.inputs.empty())
      throw std::invalid_argument("gate weight/input arity mismatch");
    for (int in : g.inputs) {
      if (in < 0 || in >= g.id)
        throw std::invalid_argument("gate input must precede the gate");
      if (in >= n) {
        bool found = false;
        for (const auto& h : gates) {
          if (h.id == in) {
            found = true;
            break;
          }
          if (h.id == g.id) break;
        }
        if (!found)
          throw std::invalid_argument("gate input refers to a missing gate");
      }
    }
    prev = g.id;
  }
  if (output_id < 0 || output_id >= n) {
    bool found = false;
    for (const auto& g : gates) {
      if (g.id == output_id) found = true;
    }
    if (!found) throw std::invalid_argument("output id refers to nothing");
  }
}

bool ThresholdCircuit::eval(const Example& x) const {
  if (int(x.size()) != n)
    throw std::invalid_argument("example length does not match circuit arity");
  std::unordered_map<int, bool> value;
  auto input_value = [&](int id) {
    if (id < n) return x[std::size_t(id)] == '1';
    auto it = value.find(id);
    if (it == value.end())
      throw std::invalid_argument("gate input refers to a missing gate");
    return it->second;
  };
  for (const auto& g : gates) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
      if (input_value(g.inputs[i])) sum += g.weights[i];
    }
    value[g.id] = sum >= g.threshold;
  }
  return input_value(output_id);
}

std::string to_text(const ThresholdCircuit& c) {
  std::ostringstream out;
  out << "{\"n\":" << c.n << ",\"gates\":[";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (i) out << ",";
    out << "{\"id\":" << g.id << ",\"weights\":[";
    for (std::size_t j = 0; j < g.weights.size(); ++j)
      out << (j ? "," : "") << g.weights[j];
    out << "],\"threshold\":" << g.threshold << ",\"inputs\":[";
    for (std::size_t j = 0; j < g.inputs.size(); ++j)
      out << (j ? "," : "") << g.inputs[j];
    out << "]}";
  }
  out << "],\"output\":" << c.output_id << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// Superstrings

bool SuperstringRep::contains(const Example& x) const {
  if (int(x.size()) != window)
    throw std::invalid_argument("example length does not match window");
  return text.find(x) != std::string::npos;
}

std::string to_text(const SuperstringRep& r) { return r.text; }

// ---------------------------------------------------------------------------
// Representation dispatch

const char* system_name(SystemId id) {
  switch (id) {
    case SystemId::Monomial:
      return "monomial";
    case SystemId::KDnf:
      return "kdnf";
    case SystemId::Threshold:
      return "threshold";
    case SystemId::Superstring:
      return "superstring";
  }
  return "?";
}

SystemId parse_system(const std::string& name) {
  if (name == "monomial") return SystemId::Monomial;
  if (name == "kdnf") return SystemId::KDnf;
  if (name == "threshold") return SystemId::Threshold;
  if (name == "superstring") return SystemId::Superstring;
  throw InputFormatError("unknown representation system: " + name);
}

Alphabet system_alphabet(SystemId id) {
  return id == SystemId::Superstring ? Alphabet::Dna : Alphabet::Binary;
}

SystemId system_of(const Representation& rep) {
  return std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Monomial>) return SystemId::Monomial;
        if constexpr (std::is_same_v<T, DnfFormula>) return SystemId::KDnf;
        if constexpr (std::is_same_v<T, ThresholdCircuit>)
          return SystemId::Threshold;
        if constexpr (std::is_same_v<T, SuperstringRep>)
          return SystemId::Superstring;
      },
      rep);
}

int dimension_of(const Representation& rep) {
  return std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Monomial>) return r.n();
        if constexpr (std::is_same_v<T, DnfFormula>) return r.n;
        if constexpr (std::is_same_v<T, ThresholdCircuit>) return r.n;
        if constexpr (std::is_same_v<T, SuperstringRep>) return r.window;
      },
      rep);
}

bool evaluate(const Representation& rep, const Example& x) {
  return std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Monomial>) return r.accepts(x);
        if constexpr (std::is_same_v<T, DnfFormula>) return r.accepts(x);
        if constexpr (std::is_same_v<T, ThresholdCircuit>) return r.eval(x);
        if constexpr (std::is_same_v<T, SuperstringRep>) return r.contains(x);
      },
      rep);
}

std::string to_text(const Representation& rep) {
  return std::visit([](const auto& r) { return to_text(r); }, rep);
}

namespace {

void encode_monomial(BitWriter& w, const Monomial& m) {
  for (LiteralState s : m.states) w.write_uint(std::uint64_t(s), 2);
}

Monomial decode_monomial(BitReader& r, int n) {
  Monomial m;
  m.states.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i)
    m.states.push_back(LiteralState(r.read_uint(2)));
  return m;
}

}  // namespace

std::size_t representation_length_bits(const Representation& rep) {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          return 2 * r.states.size();
        } else if constexpr (std::is_same_v<T, DnfFormula>) {
          return prefix_free_length(r.terms.size()) +
                 r.terms.size() * 2 * std::size_t(r.n);
        } else if constexpr (std::is_same_v<T, ThresholdCircuit>) {
          std::size_t bits = prefix_free_length(r.gates.size());
          for (const auto& g : r.gates) {
            bits += prefix_free_length(std::uint64_t(g.id));
            bits += prefix_free_length(g.inputs.size());
            for (auto wgt : g.weights)
              bits += prefix_free_length(zigzag_encode(wgt));
            bits += prefix_free_length(zigzag_encode(g.threshold));
            for (int in : g.inputs)
              bits += prefix_free_length(std::uint64_t(in));
          }
          return bits + prefix_free_length(std::uint64_t(r.output_id));
        } else {
          return 2 * r.text.size();
        }
      },
      rep);
}

BitString encode_representation(const Representation& rep) {
  BitWriter w;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          encode_monomial(w, r);
        } else if constexpr (std::is_same_v<T, DnfFormula>) {
          write_prefix_free(w, r.terms.size());
          for (const auto& t : r.terms) encode_monomial(w, t);
        } else if constexpr (std::is_same_v<T, ThresholdCircuit>) {
          write_prefix_free(w, r.gates.size());
          for (const auto& g : r.gates) {
            write_prefix_free(w, std::uint64_t(g.id));
            write_prefix_free(w, g.inputs.size());
            for (auto wgt : g.weights)
              write_prefix_free(w, zigzag_encode(wgt));
            write_prefix_free(w, zigzag_encode(g.threshold));
            for (int in : g.inputs) write_prefix_free(w, std::uint64_t(in));
          }
          write_prefix_free(w, std::uint64_t(r.output_id));
        } else {
          for (char c : r.text)
            w.write_uint(std::uint64_t(symbol_index(Alphabet::Dna, c)), 2);
        }
      },
      rep);
  return w.take();
}

Representation decode_representation(SystemId id, const BitString& bits,
                                     int n) {
  BitReader r(bits);
  switch (id) {
    case SystemId::Monomial: {
      if (bits.size() != std::size_t(2 * n))
        throw InputFormatError("monomial code has wrong length");
      return decode_monomial(r, n);
    }
    case SystemId::KDnf: {
      DnfFormula f;
      f.n = n;
      std::uint64_t terms = read_prefix_free(r);
      for (std::uint64_t i = 0; i < terms; ++i) {
        Monomial t = decode_monomial(r, n);
        if (t.has_both())
          throw InputFormatError("DNF term contains contradictory literals");
        f.terms.push_back(std::move(t));
      }
      if (!r.exhausted()) throw InputFormatError("trailing bits after DNF");
      return f;
    }
    case SystemId::Threshold: {
      ThresholdCircuit c;
      c.n = n;
      std::uint64_t gates = read_prefix_free(r);
      for (std::uint64_t i = 0; i < gates; ++i) {
        ThresholdGate g;
        g.id = int(read_prefix_free(r));
        std::uint64_t degree = read_prefix_free(r);
        for (std::uint64_t j = 0; j < degree; ++j)
          g.weights.push_back(zigzag_decode(read_prefix_free(r)));
        g.threshold = zigzag_decode(read_prefix_free(r));
        for (std::uint64_t j = 0; j < degree; ++j)
          g.inputs.push_back(int(read_prefix_free(r)));
        c.gates.push_back(std::move(g));
      }
      c.output_id = int(read_prefix_free(r));
      if (!r.exhausted())
        throw InputFormatError("trailing bits after circuit");
      try {
        c.validate();
      } catch (const std::invalid_argument& e) {
        throw InputFormatError(std::string("decoded circuit invalid: ") +
                               e.what());
      }
      return c;
    }
    case SystemId::Superstring: {
      if (bits.size() % 2)
        throw InputFormatError("superstring code has odd bit length");
      SuperstringRep s;
      s.window = n;
      while (!r.exhausted())
        s.text.push_back(symbol_at(Alphabet::Dna, int(r.read_uint(2))));
      return s;
    }
  }
  throw std::invalid_argument("unknown system id");
}

// ---------------------------------------------------------------------------
// Samples

LabeledSample::LabeledSample(std::vector<LabeledExample> items)
    : items_(std::move(items)) {
  for (const auto& it : items_) {
    auto [pos, inserted] = index_.try_emplace(it.value, it.label, 1);
    if (!inserted) {
      if (pos->second.first != it.label)
        throw InputFormatError("sample assigns both labels to '" + it.value +
                               "'");
      ++pos->second.second;
    } else {
      distinct_.push_back(it);
    }
  }
}

std::size_t LabeledSample::multiplicity(const Example& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? 0 : it->second.second;
}

std::optional<bool> LabeledSample::label_of(const Example& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second.first;
}

double sample_error(const Representation& rep, const LabeledSample& sample) {
  if (sample.empty()) return 0.0;
  std::size_t wrong = 0;
  for (const auto& it : sample.distinct()) {
    if (evaluate(rep, it.value) != it.label)
      wrong += sample.multiplicity(it.value);
  }
  return double(wrong) / double(sample.size());
}

bool consistent_with(const Representation& rep, const LabeledSample& sample) {
  for (const auto& it : sample.distinct()) {
    if (evaluate(rep, it.value) != it.label) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Distributions

FiniteDistribution::FiniteDistribution(std::vector<Example> support,
                                       std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty() || support_.size() != probs_.size())
    throw std::invalid_argument("distribution support/probability mismatch");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("probabilities sum to " +
                                std::to_string(total) + ", expected 1");
  std::unordered_map<Example, int> seen;
  for (const auto& x : support_) {
    if (++seen[x] > 1)
      throw std::invalid_argument("duplicate support point '" + x + "'");
  }
  cumulative_.resize(probs_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    acc += probs_[i];
    cumulative_[i] = acc;
  }
  cumulative_.back() = 1.0;
}

FiniteDistribution FiniteDistribution::uniform(std::vector<Example> support) {
  std::vector<double> probs(support.size(),
                            1.0 / double(support.empty() ? 1 : support.size()));
  return FiniteDistribution(std::move(support), std::move(probs));
}

double FiniteDistribution::mass_where(
    const std::function<bool(const Example&)>& pred) const {
  double mass = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (pred(support_[i])) mass += probs_[i];
  }
  return mass;
}

const Example& FiniteDistribution::pick(double unit) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), unit);
  std::size_t idx = std::size_t(it - cumulative_.begin());
  if (idx >= support_.size()) idx = support_.size() - 1;
  return support_[idx];
}

// ---------------------------------------------------------------------------
// RNG

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(mix64(seed + kGolden) ^ (stream_id * kGolden + 1))) {}

std::uint64_t RngStream::next_u64() {
  return mix64(key_ + (++counter_) * kGolden);
}

double RngStream::next_unit() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below(0)");
  std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

RngStream RngStream::split(std::uint64_t substream) const {
  return RngStream(key_, substream);
}

// ---------------------------------------------------------------------------
// Oracle

Oracle::Oracle(FiniteDistribution dist, Representation target,
               RngStream stream)
    : dist_(std::move(dist)), target_(std::move(target)), stream_(stream) {}

LabeledExample Oracle::draw() {
  const Example& x = dist_.pick(stream_.next_unit());
  return LabeledExample{x, evaluate(target_, x)};
}

std::vector<LabeledExample> Oracle::draw_many(std::size_t count) {
  std::vector<LabeledExample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw());
  return out;
}

double symmetric_difference_error(const Representation& a,
                                  const Representation& b,
                                  const FiniteDistribution& dist) {
  return dist.mass_where(
      [&](const Example& x) { return evaluate(a, x) != evaluate(b, x); });
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t pow3(int n) {
  if (n < 0 || n > 40) throw InfeasibleError("3^n exceeds 64 bits");
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

std::uint64_t monomial_class_size(int n) { return pow3(n) + 1; }

Monomial monomial_by_index(std::uint64_t index, int n) {
  std::uint64_t size = monomial_class_size(n);
  if (index >= size) throw std::invalid_argument("monomial index out of range");
  if (index == size - 1) return Monomial::all_literals(n);
  Monomial m = Monomial::always_true(n);
  for (int i = 0; i < n; ++i) {
    switch (index % 3) {
      case 1:
        m.states[std::size_t(i)] = LiteralState::Positive;
        break;
      case 2:
        m.states[std::size_t(i)] = LiteralState::Negative;
        break;
      default:
        break;
    }
    index /= 3;
  }
  return m;
}

Monomial random_monomial(int n, RngStream& rng) {
  Monomial m = Monomial::always_true(n);
  for (auto& s : m.states) {
    switch (rng.next_below(3)) {
      case 1:
        s = LiteralState::Positive;
        break;
      case 2:
        s = LiteralState::Negative;
        break;
      default:
        break;
    }
  }
  return m;
}

Monomial random_monomial_of_size(int n, int literals, RngStream& rng) {
  if (literals < 0 || literals > n)
    throw std::invalid_argument("monomial size out of range");
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 0);
  // Partial Fisher-Yates: the first `literals` entries are the chosen vars.
  for (int i = 0; i < literals; ++i) {
    std::size_t j = std::size_t(i) + rng.next_below(std::uint64_t(n - i));
    std::swap(vars[std::size_t(i)], vars[j]);
  }
  Monomial m = Monomial::always_true(n);
  for (int i = 0; i < literals; ++i) {
    m.states[std::size_t(vars[std::size_t(i)])] = rng.next_below(2)
                                                      ? LiteralState::Negative
                                                      : LiteralState::Positive;
  }
  return m;
}

namespace {

struct CircuitEnumerator {
  const CircuitEnvelope& env;
  const std::function<bool(const ThresholdCircuit&)>& visit;
  ThresholdCircuit current;
  std::uint64_t count = 0;
  bool stopped = false;

  bool emit() {
    current.output_id = current.gates.back().id;
    ++count;
    if (!visit(current)) {
      stopped = true;
      return false;
    }
    return true;
  }

  void weights_rec(ThresholdGate& gate, std::size_t pos) {
    if (stopped) return;
    if (pos == gate.inputs.size()) {
      std::int64_t lo = 0, hi = 0;
      for (auto w : gate.weights) {
        lo += std::min<std::int64_t>(w, 0);
        hi += std::max<std::int64_t>(w, 0);
      }
      for (std::int64_t t = lo; t <= hi + 1 && !stopped; ++t) {
        gate.threshold = t;
        current.gates.push_back(gate);
        if (emit() && int(current.gates.size()) < env.max_gates)
          gates_rec();
        current.gates.pop_back();
      }
      return;
    }
    for (std::int64_t w = env.weight_min; w <= env.weight_max && !stopped;
         ++w) {
      if (w == 0) continue;
      gate.weights[pos] = w;
      weights_rec(gate, pos + 1);
    }
  }

  void inputs_rec(ThresholdGate& gate, int from, int remaining) {
    if (stopped) return;
    if (remaining == 0) {
      gate.weights.assign(gate.inputs.size(), 0);
      weights_rec(gate, 0);
      return;
    }
    int avail = env.n + int(current.gates.size());
    for (int id = from; id <= avail - remaining && !stopped; ++id) {
      gate.inputs.push_back(id);
      inputs_rec(gate, id + 1, remaining - 1);
      gate.inputs.pop_back();
    }
  }

  void gates_rec() {
    if (stopped) return;
    ThresholdGate gate;
    gate.id = env.n + int(current.gates.size());
    for (int d = 1; d <= env.max_degree && !stopped; ++d) {
      gate.inputs.clear();
      inputs_rec(gate, 0, d);
    }
  }
};

}  // namespace

std::uint64_t for_each_circuit(
    const CircuitEnvelope& env,
    const std::function<bool(const ThresholdCircuit&)>& visit) {
  if (env.n <= 0 || env.max_gates <= 0 || env.max_degree <= 0 ||
      env.weight_min > env.weight_max)
    throw std::invalid_argument("degenerate circuit envelope");
  CircuitEnumerator e{env, visit, ThresholdCircuit{env.n, {}, 0}, 0, false};
  e.gates_rec();
  return e.count;
}

std::uint64_t circuit_class_size(const CircuitEnvelope& env) {
  return for_each_circuit(env, [](const ThresholdCircuit&) { return true; });
}

std::vector<Example> full_domain(Alphabet a, int length) {
  int per = bits_per_symbol(a);
  if (length < 0 || length * per > 20)
    throw InfeasibleError("domain too large to materialize");
  int radix = a == Alphabet::Binary ? 2 : 4;
  std::uint64_t total = 1;
  for (int i = 0; i < length; ++i) total *= std::uint64_t(radix);
  std::vector<Example> out;
  out.reserve(total);
  Example x(std::size_t(length), symbol_at(a, 0));
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t rest = v;
    for (int i = length - 1; i >= 0; --i) {
      x[std::size_t(i)] = symbol_at(a, int(rest % std::uint64_t(radix)));
      rest /= std::uint64_t(radix);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace occam
