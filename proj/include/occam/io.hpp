#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "occam/bits.hpp"
#include "occam/core.hpp"

namespace occam {

// Sample files: one example per line as "<label>\t<example>", label 0 or 1,
// lines terminated by LF.
LabeledSample read_sample(std::istream& in, Alphabet a);
LabeledSample read_sample_file(const std::string& path, Alphabet a);
void write_sample(std::ostream& out, const LabeledSample& sample);
void write_sample_file(const std::string& path, const LabeledSample& sample);

struct FastaRecord {
  std::string name;
  std::string sequence;
};

// DNA FASTA; sequences may span multiple lines.
std::vector<FastaRecord> read_fasta(std::istream& in);
std::vector<FastaRecord> read_fasta_file(const std::string& path);

// Packed witness files in the serialize() wire layout.
void write_bits_file(const std::string& path, const BitString& bits);
BitString read_bits_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace occam
