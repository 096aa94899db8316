#include "occam/coding.hpp"

#include <algorithm>
#include <stdexcept>

#include "occam/errors.hpp"
#include "occam/learners.hpp"

namespace occam {

const char* codec_name(CodecId id) {
  switch (id) {
    case CodecId::MonomialGivenTarget:
      return "monomial";
    case CodecId::SuperstringGroups:
      return "superstring";
    case CodecId::ExampleTranscript:
      return "transcript";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial-given-target codec

namespace {

std::string monomial_conditioning(const Monomial& target) {
  return "monomial-target:" + to_text(target) +
         ":n=" + std::to_string(target.n());
}

void check_conditioning(const WitnessCode& code, const std::string& expected,
                        CodecId id) {
  if (code.codec != id)
    throw InputFormatError(std::string("witness code is not a ") +
                           codec_name(id) + " code");
  if (code.conditioning != expected)
    throw InputFormatError("witness conditioning mismatch: encoder declared '" +
                           code.conditioning + "', decoder has '" + expected +
                           "'");
}

}  // namespace

std::size_t monomial_code_bound_bits(const Monomial& target) {
  return trit_bits(std::size_t(target.n() - target.literal_count()));
}

WitnessCode encode_monomial_given_target(const Monomial& hypothesis,
                                         const Monomial& target) {
  if (hypothesis.n() != target.n())
    throw std::invalid_argument("hypothesis/target arity mismatch");
  std::vector<std::uint8_t> trits;
  for (int i = 0; i < target.n(); ++i) {
    LiteralState t = target.states[std::size_t(i)];
    LiteralState h = hypothesis.states[std::size_t(i)];
    if (t != LiteralState::Absent) {
      if (h != t)
        throw std::invalid_argument(
            "hypothesis does not extend the target's literals");
      continue;
    }
    switch (h) {
      case LiteralState::Absent:
        trits.push_back(0);
        break;
      case LiteralState::Positive:
        trits.push_back(1);
        break;
      case LiteralState::Negative:
        trits.push_back(2);
        break;
      case LiteralState::Both:
        throw std::invalid_argument(
            "hypothesis has contradictory literals outside the target");
    }
  }
  BitWriter w;
  write_trits(w, trits);
  return WitnessCode{CodecId::MonomialGivenTarget, w.take(),
                     monomial_conditioning(target)};
}

Monomial decode_monomial_given_target(const WitnessCode& code,
                                      const Monomial& target) {
  check_conditioning(code, monomial_conditioning(target),
                     CodecId::MonomialGivenTarget);
  std::size_t t = std::size_t(target.n() - target.literal_count());
  if (code.bits.size() != trit_bits(t))
    throw InputFormatError("monomial witness has wrong bit length");
  BitReader r(code.bits);
  std::vector<std::uint8_t> trits = read_trits(r, t);
  Monomial out = target;
  std::size_t next = 0;
  for (int i = 0; i < target.n(); ++i) {
    if (target.states[std::size_t(i)] != LiteralState::Absent) continue;
    switch (trits[next++]) {
      case 0:
        break;
      case 1:
        out.states[std::size_t(i)] = LiteralState::Positive;
        break;
      default:
        out.states[std::size_t(i)] = LiteralState::Negative;
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Superstring codec

namespace {

std::string superstring_conditioning(const SuperstringRep& target) {
  return "superstring-target:len=" + std::to_string(target.text.size()) +
         ":n=" + std::to_string(target.window);
}

struct Group {
  std::size_t pos_first_t = 0;  // position of the leader window in target
  std::size_t pos_last_t = 0;   // position of the last window in target
  std::size_t overlap = 0;      // leader/last window overlap, in [1, n]
};

std::string merge_group_windows(const SuperstringRep& target,
                                const Group& g) {
  std::size_t n = std::size_t(target.window);
  std::string sup = target.text.substr(g.pos_first_t, n);
  std::string last = target.text.substr(g.pos_last_t, n);
  sup.append(last, g.overlap, n - g.overlap);
  return sup;
}

std::string remerge_groups(const SuperstringRep& target,
                           const std::vector<Group>& groups) {
  std::string acc;
  for (const auto& g : groups) {
    std::string sup = merge_group_windows(target, g);
    if (acc.empty()) {
      acc = std::move(sup);
      continue;
    }
    std::size_t ov = max_overlap(acc, sup);
    acc.append(sup, ov, sup.size() - ov);
  }
  return acc;
}

}  // namespace

std::size_t superstring_group_bits(std::size_t s, std::size_t n) {
  return 2 * std::size_t(ceil_log2(s)) + std::size_t(ceil_log2(n));
}

std::size_t superstring_code_bound_bits(std::size_t groups, std::size_t s,
                                        std::size_t n) {
  return groups * superstring_group_bits(s, n) + 1;
}

WitnessCode encode_superstring_given_target(
    const SuperstringRep& hypothesis, const SuperstringRep& target,
    const std::vector<Example>& examples, SuperstringCodeStats* stats) {
  if (hypothesis.window != target.window)
    throw std::invalid_argument("hypothesis/target window mismatch");
  std::size_t n = std::size_t(target.window);
  std::size_t s = target.text.size();
  if (n == 0 || s < n)
    throw std::invalid_argument("degenerate target superstring");
  if (examples.empty())
    throw std::invalid_argument("superstring codec needs examples");

  struct Placed {
    std::size_t pos_h;  // leftmost occurrence in the hypothesis
    std::size_t pos_t;  // leftmost occurrence in the target
  };
  std::vector<Placed> placed;
  placed.reserve(examples.size());
  for (const auto& e : examples) {
    if (e.size() != n)
      throw std::invalid_argument("examples must have the window length");
    std::size_t pt = target.text.find(e);
    if (pt == std::string::npos)
      throw std::invalid_argument("example is not a substring of the target");
    std::size_t ph = hypothesis.text.find(e);
    if (ph == std::string::npos)
      throw std::invalid_argument(
          "example is not a substring of the hypothesis");
    placed.push_back({ph, pt});
  }
  std::sort(placed.begin(), placed.end(),
            [](const Placed& a, const Placed& b) { return a.pos_h < b.pos_h; });
  placed.erase(std::unique(placed.begin(), placed.end(),
                           [](const Placed& a, const Placed& b) {
                             return a.pos_h == b.pos_h;
                           }),
               placed.end());

  bool covered = placed.front().pos_h == 0;
  std::size_t reach = placed.front().pos_h + n;
  std::vector<Group> groups;
  std::size_t leader_h = placed.front().pos_h;
  Group current{placed.front().pos_t, placed.front().pos_t, n};
  for (std::size_t i = 1; i < placed.size(); ++i) {
    const Placed& p = placed[i];
    if (p.pos_h > reach) covered = false;
    reach = std::max(reach, p.pos_h + n);
    if (p.pos_h < leader_h + n) {
      // Overlaps the leader: stays in the current group.
      current.pos_last_t = p.pos_t;
      current.overlap = leader_h + n - p.pos_h;
    } else {
      groups.push_back(current);
      leader_h = p.pos_h;
      current = Group{p.pos_t, p.pos_t, n};
    }
  }
  groups.push_back(current);
  covered = covered && reach == hypothesis.text.size();

  if (stats) {
    stats->groups = groups.size();
    stats->examples_cover_hypothesis = covered;
    stats->literal_fallback = false;
  }

  std::string conditioning = superstring_conditioning(target);

  // Self-check: only emit the group form if the decoder would reproduce the
  // hypothesis exactly.
  if (remerge_groups(target, groups) == hypothesis.text) {
    BitWriter w;
    w.write_bit(false);
    int pos_bits = ceil_log2(s);
    int ov_bits = ceil_log2(n);
    for (const auto& g : groups) {
      w.write_uint(g.pos_first_t, pos_bits);
      w.write_uint(g.pos_last_t, pos_bits);
      w.write_uint(g.overlap - 1, ov_bits);
    }
    return WitnessCode{CodecId::SuperstringGroups, w.take(), conditioning};
  }

  if (stats) stats->literal_fallback = true;
  BitWriter w;
  w.write_bit(true);
  for (char c : hypothesis.text)
    w.write_uint(std::uint64_t(symbol_index(Alphabet::Dna, c)), 2);
  return WitnessCode{CodecId::SuperstringGroups, w.take(), conditioning};
}

SuperstringRep decode_superstring_given_target(const WitnessCode& code,
                                               const SuperstringRep& target) {
  check_conditioning(code, superstring_conditioning(target),
                     CodecId::SuperstringGroups);
  std::size_t n = std::size_t(target.window);
  std::size_t s = target.text.size();
  BitReader r(code.bits);
  if (r.read_bit()) {
    if (r.remaining() % 2)
      throw InputFormatError("literal superstring payload has odd length");
    SuperstringRep out{"", target.window};
    while (!r.exhausted())
      out.text.push_back(symbol_at(Alphabet::Dna, int(r.read_uint(2))));
    return out;
  }
  std::size_t group_bits = superstring_group_bits(s, n);
  if (group_bits == 0 || r.remaining() == 0 || r.remaining() % group_bits)
    throw InputFormatError("superstring witness length is not a group multiple");
  std::size_t count = r.remaining() / group_bits;
  int pos_bits = ceil_log2(s);
  int ov_bits = ceil_log2(n);
  std::vector<Group> groups;
  groups.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Group g;
    g.pos_first_t = r.read_uint(pos_bits);
    g.pos_last_t = r.read_uint(pos_bits);
    g.overlap = r.read_uint(ov_bits) + 1;
    if (g.pos_first_t + n > s || g.pos_last_t + n > s)
      throw InputFormatError("group window position outside the target");
    if (g.overlap > n)
      throw InputFormatError("group overlap exceeds the window length");
    groups.push_back(g);
  }
  return SuperstringRep{remerge_groups(target, groups), target.window};
}

// ---------------------------------------------------------------------------
// Example transcripts

namespace {

std::string transcript_conditioning(Alphabet a, int n) {
  return std::string("transcript:") + alphabet_name(a) +
         ":n=" + std::to_string(n);
}

void write_example_list(BitWriter& w, const std::vector<Example>& list,
                        Alphabet a, int n) {
  write_prefix_free(w, list.size());
  if (list.empty()) return;
  bool fixed = true;
  for (const auto& e : list) {
    if (e.empty() || int(e.size()) > n)
      throw std::invalid_argument(
          "transcript strings must have length in [1, n]");
    validate_example(a, e);
    if (int(e.size()) != n) fixed = false;
  }
  w.write_bit(fixed);
  int per = bits_per_symbol(a);
  for (const auto& e : list) {
    if (!fixed) write_prefix_free(w, e.size());
    for (char c : e) w.write_uint(std::uint64_t(symbol_index(a, c)), per);
  }
}

std::vector<Example> read_example_list(BitReader& r, Alphabet a, int n) {
  std::uint64_t count = read_prefix_free(r);
  std::vector<Example> list;
  list.reserve(count);
  if (count == 0) return list;
  bool fixed = r.read_bit();
  int per = bits_per_symbol(a);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t len = fixed ? std::uint64_t(n) : read_prefix_free(r);
    if (len == 0 || len > std::uint64_t(n))
      throw InputFormatError("transcript string length out of range");
    Example e;
    e.reserve(len);
    for (std::uint64_t j = 0; j < len; ++j)
      e.push_back(symbol_at(a, int(r.read_uint(per))));
    list.push_back(std::move(e));
  }
  return list;
}

}  // namespace

WitnessCode encode_examples_transcript(const Transcript& transcript,
                                       Alphabet alphabet, int n) {
  if (n < 1) throw std::invalid_argument("transcript needs n >= 1");
  BitWriter w;
  write_example_list(w, transcript.fed, alphabet, n);
  write_example_list(w, transcript.exceptions, alphabet, n);
  return WitnessCode{CodecId::ExampleTranscript, w.take(),
                     transcript_conditioning(alphabet, n)};
}

Transcript decode_examples_transcript(const WitnessCode& code,
                                      Alphabet alphabet, int n) {
  check_conditioning(code, transcript_conditioning(alphabet, n),
                     CodecId::ExampleTranscript);
  BitReader r(code.bits);
  Transcript t;
  t.fed = read_example_list(r, alphabet, n);
  t.exceptions = read_example_list(r, alphabet, n);
  if (!r.exhausted())
    throw InputFormatError("trailing bits after transcript");
  return t;
}

std::size_t transcript_code_bits(const Transcript& transcript,
                                 Alphabet alphabet, int n) {
  int per = bits_per_symbol(alphabet);
  auto list_bits = [&](const std::vector<Example>& list) {
    std::size_t bits = prefix_free_length(list.size());
    if (list.empty()) return bits;
    bits += 1;  // mode
    bool fixed = std::all_of(list.begin(), list.end(), [&](const Example& e) {
      return int(e.size()) == n;
    });
    for (const auto& e : list) {
      if (!fixed) bits += prefix_free_length(e.size());
      bits += e.size() * std::size_t(per);
    }
    return bits;
  };
  return list_bits(transcript.fed) + list_bits(transcript.exceptions);
}

}  // namespace occam
