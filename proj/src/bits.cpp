#include "occam/bits.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "occam/errors.hpp"

namespace occam {

void BitString::push_back(bool bit) {
  if ((size_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= std::uint8_t(1u << (7 - (size_ & 7)));
  ++size_;
}

void BitString::append(const BitString& other) {
  if ((size_ & 7) == 0) {
    // Byte-aligned fast path.
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

bool BitString::operator==(const BitString& other) const {
  return size_ == other.size_ && bytes_ == other.bytes_;
}

std::string BitString::to_text() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

BitString BitString::from_text(const std::string& text) {
  BitString b;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw InputFormatError("bit string contains non-binary character");
    b.push_back(c == '1');
  }
  return b;
}

std::vector<std::uint8_t> BitString::serialize() const {
  std::vector<std::uint8_t> out(8 + bytes_.size());
  std::uint64_t n = size_;
  for (int i = 0; i < 8; ++i) out[i] = std::uint8_t(n >> (8 * i));
  std::memcpy(out.data() + 8, bytes_.data(), bytes_.size());
  return out;
}

BitString BitString::deserialize(const std::uint8_t* data, std::size_t len) {
  if (len < 8) throw InputFormatError("bit stream shorter than its header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t(data[i]) << (8 * i);
  std::size_t payload = (n + 7) / 8;
  if (len != 8 + payload)
    throw InputFormatError("bit stream length does not match its header");
  BitString b;
  b.size_ = n;
  b.bytes_.assign(data + 8, data + 8 + payload);
  if (n & 7) {
    std::uint8_t mask = std::uint8_t(0xFFu << (8 - (n & 7)));
    if (b.bytes_.back() & std::uint8_t(~mask))
      throw InputFormatError("bit stream has nonzero padding bits");
  }
  return b;
}

void BitWriter::write_uint(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) out_.push_back((value >> i) & 1);
}

bool BitReader::read_bit() {
  if (pos_ >= bits_.size()) throw InputFormatError("bit stream truncated");
  return bits_[pos_++];
}

std::uint64_t BitReader::read_uint(int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | std::uint64_t(read_bit());
  return v;
}

int binary_digits(std::uint64_t i) {
  int d = 0;
  while (i) {
    ++d;
    i >>= 1;
  }
  return d;
}

void write_prefix_free(BitWriter& w, std::uint64_t value) {
  int d = binary_digits(value);
  for (int i = 0; i < d; ++i) w.write_bit(true);
  w.write_bit(false);
  if (d > 0) w.write_uint(value, d);
}

std::uint64_t read_prefix_free(BitReader& r) {
  int d = 0;
  while (r.read_bit()) {
    if (++d > 64) throw InputFormatError("prefix-free code overlong");
  }
  if (d == 0) return 0;
  std::uint64_t v = r.read_uint(d);
  if (!(v >> (d - 1)))
    throw InputFormatError("prefix-free payload lacks leading one");
  return v;
}

std::size_t prefix_free_length(std::uint64_t value) {
  return std::size_t(2 * binary_digits(value) + 1);
}

std::uint64_t zigzag_encode(std::int64_t value) {
  return (std::uint64_t(value) << 1) ^ std::uint64_t(value >> 63);
}

std::int64_t zigzag_decode(std::uint64_t value) {
  return std::int64_t(value >> 1) ^ -std::int64_t(value & 1);
}

int ceil_log2(std::uint64_t count) {
  if (count == 0) throw InfeasibleError("ceil_log2 of zero");
  if (count == 1) return 0;
  return binary_digits(count - 1);
}

std::size_t trit_bits(std::size_t count) {
  // count * log2(3) is never within double rounding error of an integer for
  // any feasible count (3^k is not a power of two).
  return std::size_t(std::ceil(double(count) * std::log2(3.0)));
}

namespace {

// Minimal little-endian bignum: just enough for radix-3 block codes.
struct BigNat {
  std::vector<std::uint32_t> limbs;  // little-endian base 2^32

  void mul_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : limbs) {
      std::uint64_t v = std::uint64_t(limb) * mul + carry;
      limb = std::uint32_t(v);
      carry = v >> 32;
    }
    while (carry) {
      limbs.push_back(std::uint32_t(carry));
      carry >>= 32;
    }
  }

  std::uint32_t divmod(std::uint32_t div) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
      std::uint64_t v = (rem << 32) | limbs[i];
      limbs[i] = std::uint32_t(v / div);
      rem = v % div;
    }
    while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    return std::uint32_t(rem);
  }

  bool bit(std::size_t i) const {
    std::size_t limb = i >> 5;
    if (limb >= limbs.size()) return false;
    return (limbs[limb] >> (i & 31)) & 1;
  }

  void set_bit(std::size_t i) {
    std::size_t limb = i >> 5;
    if (limb >= limbs.size()) limbs.resize(limb + 1, 0);
    limbs[limb] |= std::uint32_t(1) << (i & 31);
  }

  bool is_zero() const { return limbs.empty(); }
};

}  // namespace

void write_trits(BitWriter& w, const std::vector<std::uint8_t>& trits) {
  BigNat value;
  for (std::size_t i = trits.size(); i-- > 0;) {
    if (trits[i] > 2) throw InfeasibleError("trit out of range");
    value.mul_add(3, trits[i]);
  }
  std::size_t width = trit_bits(trits.size());
  for (std::size_t i = width; i-- > 0;) w.write_bit(value.bit(i));
}

std::vector<std::uint8_t> read_trits(BitReader& r, std::size_t count) {
  std::size_t width = trit_bits(count);
  BigNat value;
  for (std::size_t i = width; i-- > 0;) {
    if (r.read_bit()) value.set_bit(i);
  }
  std::vector<std::uint8_t> trits(count);
  for (std::size_t i = 0; i < count; ++i)
    trits[i] = std::uint8_t(value.divmod(3));
  if (!value.is_zero())
    throw InputFormatError("trit block decodes past its radix range");
  return trits;
}

}  // namespace occam
