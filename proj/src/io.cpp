#include "occam/io.hpp"

#include <fstream>
#include <sstream>

#include "occam/errors.hpp"

namespace occam {

LabeledSample read_sample(std::istream& in, Alphabet a) {
  std::vector<LabeledExample> items;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      throw InputFormatError("sample line " + std::to_string(lineno) +
                             " is empty");
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw InputFormatError("sample line " + std::to_string(lineno) +
                             " has no tab separator");
    std::string label = line.substr(0, tab);
    if (label != "0" && label != "1")
      throw InputFormatError("sample line " + std::to_string(lineno) +
                             " has label '" + label + "', expected 0 or 1");
    Example x = line.substr(tab + 1);
    if (x.empty())
      throw InputFormatError("sample line " + std::to_string(lineno) +
                             " has an empty example");
    validate_example(a, x);
    items.push_back({std::move(x), label == "1"});
  }
  return LabeledSample(std::move(items));
}

LabeledSample read_sample_file(const std::string& path, Alphabet a) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open sample file: " + path);
  return read_sample(in, a);
}

void write_sample(std::ostream& out, const LabeledSample& sample) {
  for (const auto& it : sample.items())
    out << (it.label ? '1' : '0') << '\t' << it.value << '\n';
}

void write_sample_file(const std::string& path, const LabeledSample& sample) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFormatError("cannot open for writing: " + path);
  write_sample(out, sample);
}

std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '>') {
      records.push_back({line.substr(1), ""});
      continue;
    }
    if (records.empty())
      throw InputFormatError("FASTA sequence data before any '>' header");
    for (char c : line) {
      if (!symbol_valid(Alphabet::Dna, c))
        throw InputFormatError("FASTA line " + std::to_string(lineno) +
                               " has non-DNA symbol '" + std::string(1, c) +
                               "'");
    }
    records.back().sequence += line;
  }
  if (records.empty()) throw InputFormatError("FASTA input has no records");
  for (const auto& r : records) {
    if (r.sequence.empty())
      throw InputFormatError("FASTA record '" + r.name + "' is empty");
  }
  return records;
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open FASTA file: " + path);
  return read_fasta(in);
}

void write_bits_file(const std::string& path, const BitString& bits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFormatError("cannot open for writing: " + path);
  auto wire = bits.serialize();
  out.write(reinterpret_cast<const char*>(wire.data()),
            std::streamsize(wire.size()));
}

BitString read_bits_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open bit stream file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();
  return BitString::deserialize(
      reinterpret_cast<const std::uint8_t*>(data.data()), data.size());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFormatError("cannot open for writing: " + path);
  out << text;
}

}  // namespace occam
