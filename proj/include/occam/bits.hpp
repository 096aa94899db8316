#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace occam {

// Growable sequence of bits. Packing is MSB-first within each byte, which is
// also the wire layout used by serialize()/deserialize().
class BitString {
 public:
  BitString() = default;

  void push_back(bool bit);
  void append(const BitString& other);

  bool operator[](std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator==(const BitString& other) const;

  // "010110..." form, used by tests and the CLI's text output.
  std::string to_text() const;
  static BitString from_text(const std::string& text);

  // Wire format: 8-byte little-endian bit count, then the packed bytes with
  // the final byte zero-padded.
  std::vector<std::uint8_t> serialize() const;
  static BitString deserialize(const std::uint8_t* data, std::size_t len);

  const std::vector<std::uint8_t>& packed_bytes() const { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

class BitWriter {
 public:
  void write_bit(bool bit) { out_.push_back(bit); }
  // value's low `width` bits, most significant first.
  void write_uint(std::uint64_t value, int width);
  void append(const BitString& bits) { out_.append(bits); }
  std::size_t bit_count() const { return out_.size(); }
  BitString take() { return std::move(out_); }

 private:
  BitString out_;
};

// Reads back what BitWriter wrote; throws InputFormatError past the end.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(bits) {}
  bool read_bit();
  std::uint64_t read_uint(int width);
  std::size_t remaining() const { return bits_.size() - pos_; }
  bool exhausted() const { return pos_ == bits_.size(); }
  std::size_t position() const { return pos_; }

 private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

// Number of digits in the binary expansion of i, with bin(0) the empty string.
int binary_digits(std::uint64_t i);

// Self-delimiting code 1^{|bin(i)|} 0 bin(i); 0 -> "0", 5 -> "1110101".
void write_prefix_free(BitWriter& w, std::uint64_t value);
std::uint64_t read_prefix_free(BitReader& r);
std::size_t prefix_free_length(std::uint64_t value);

// Signed-to-unsigned folding for prefix-free coding of weights/thresholds:
// 0,-1,1,-2,2,... -> 0,1,2,3,4,...
std::uint64_t zigzag_encode(std::int64_t value);
std::int64_t zigzag_decode(std::uint64_t value);

// Smallest width such that all values in [0, count) fit; ceil(log2(count)).
int ceil_log2(std::uint64_t count);

// Radix-3 block code: `count` trits packed into exactly trit_bits(count) bits.
std::size_t trit_bits(std::size_t count);
void write_trits(BitWriter& w, const std::vector<std::uint8_t>& trits);
std::vector<std::uint8_t> read_trits(BitReader& r, std::size_t count);

}  // namespace occam
