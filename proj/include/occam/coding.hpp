#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "occam/bits.hpp"
#include "occam/core.hpp"

namespace occam {

enum class CodecId { MonomialGivenTarget, SuperstringGroups, ExampleTranscript };
const char* codec_name(CodecId id);

// A decodable certificate: |bits| upper-bounds the conditional description
// length of the encoded object given the conditioning information. The
// conditioning string is a canonical tag both sides derive independently;
// decoders reject codes whose tag does not match their own arguments.
struct WitnessCode {
  CodecId codec = CodecId::ExampleTranscript;
  BitString bits;
  std::string conditioning;

  bool operator==(const WitnessCode&) const = default;
};

// --- hypothesis monomial given target monomial ---------------------------
// One trit per variable absent in the target (index order), radix-3 packed:
// exactly ceil(t * log2 3) bits, t = #absent variables.
WitnessCode encode_monomial_given_target(const Monomial& hypothesis,
                                         const Monomial& target);
Monomial decode_monomial_given_target(const WitnessCode& code,
                                      const Monomial& target);
std::size_t monomial_code_bound_bits(const Monomial& target);

// --- greedy superstring given target superstring --------------------------
// Aligns the examples in the hypothesis, groups runs that overlap their
// leader, and stores per group two positions in the target plus the
// leader/last window overlap. The decoder rebuilds group superstrings from
// the target and re-merges neighbors by maximum overlap; the encoder
// self-checks and falls back to a literal encoding (flag + 2 bits/symbol)
// when that reconstruction would not round-trip.
struct SuperstringCodeStats {
  std::size_t groups = 0;
  bool literal_fallback = false;
  bool examples_cover_hypothesis = false;
};

WitnessCode encode_superstring_given_target(
    const SuperstringRep& hypothesis, const SuperstringRep& target,
    const std::vector<Example>& examples,
    SuperstringCodeStats* stats = nullptr);
SuperstringRep decode_superstring_given_target(const WitnessCode& code,
                                               const SuperstringRep& target);
// 2*ceil(log2 s) + ceil(log2 n) bits.
std::size_t superstring_group_bits(std::size_t s, std::size_t n);
// groups * group_bits + 1 flag bit.
std::size_t superstring_code_bound_bits(std::size_t groups, std::size_t s,
                                        std::size_t n);

// --- example transcripts ---------------------------------------------------
// Two length-prefixed lists of examples. Each nonempty list carries one mode
// bit: fixed (every string exactly length n, no per-string headers) or
// variable (prefix-free length before each string).
struct Transcript {
  std::vector<Example> fed;
  std::vector<Example> exceptions;

  bool operator==(const Transcript&) const = default;
};

WitnessCode encode_examples_transcript(const Transcript& transcript,
                                       Alphabet alphabet, int n);
Transcript decode_examples_transcript(const WitnessCode& code,
                                      Alphabet alphabet, int n);
// Exact format arithmetic; equals the encoder's output length.
std::size_t transcript_code_bits(const Transcript& transcript,
                                 Alphabet alphabet, int n);

}  // namespace occam
