#pragma once

#include <stdexcept>
#include <string>

namespace occam {

// Malformed external input: sample files, FASTA, witness bit strings.
class InputFormatError : public std::runtime_error {
 public:
  explicit InputFormatError(const std::string& what) : std::runtime_error(what) {}
};

// A request that is well-formed but has no answer: sentinel bounds, empty
// bracketing intervals, enumeration limits, unrealizable samples.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace occam
