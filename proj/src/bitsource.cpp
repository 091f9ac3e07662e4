#include "finstoch/bitsource.hpp"

#include <cctype>
#include <charconv>

namespace finstoch {

FixedBits::FixedBits(std::string_view bits) {
  for (char c : bits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit input may contain only 0, 1 and whitespace");
    bits_.push_back(c);
  }
}

std::optional<int> FixedBits::pull() {
  if (pos_ >= bits_.size()) return std::nullopt;
  return bits_[pos_++] == '1' ? 1 : 0;
}

namespace {

// splitmix64; fixed algorithm so seeded runs are reproducible everywhere.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SeededBits::SeededBits(std::uint64_t seed) : state_(seed) {}

std::optional<int> SeededBits::pull() {
  if (available_ == 0) {
    buffer_ = splitmix64(state_);
    available_ = 64;
  }
  int bit = static_cast<int>(buffer_ & 1);
  buffer_ >>= 1;
  --available_;
  return bit;
}

std::unique_ptr<BitSource> make_bit_source(std::string_view spec) {
  constexpr std::string_view kSeedPrefix = "seed:";
  if (spec.substr(0, kSeedPrefix.size()) == kSeedPrefix) {
    std::string_view digits = spec.substr(kSeedPrefix.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad seed spec: " + std::string(spec));
    return std::make_unique<SeededBits>(seed);
  }
  return std::make_unique<FixedBits>(spec);
}

}  // namespace finstoch
