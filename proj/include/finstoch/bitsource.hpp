#pragma once
// Fair-coin bit streams for the exact sampler. A source is stateful with
// a single-consumer contract: exactly one sampling activity may pull
// from it at a time. Every pulled bit is recorded, so runs are
// reproducible and entropy accounting is exact.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finstoch {

struct InsufficientEntropy : std::runtime_error {
  InsufficientEntropy() : std::runtime_error("insufficient entropy: bit source exhausted") {}
};

class BitSource {
public:
  virtual ~BitSource() = default;

  int next() {
    auto b = pull();
    if (!b) throw InsufficientEntropy();
    ++consumed_;
    trace_.push_back(*b ? '1' : '0');
    return *b;
  }

  std::size_t consumed() const { return consumed_; }
  const std::string& trace() const { return trace_; }

private:
  virtual std::optional<int> pull() = 0;

  std::size_t consumed_ = 0;
  std::string trace_;
};

// Bits from a recorded string of 0/1 characters (whitespace ignored).
class FixedBits : public BitSource {
public:
  explicit FixedBits(std::string_view bits);

private:
  std::optional<int> pull() override;

  std::string bits_;
  std::size_t pos_ = 0;
};

// Deterministic fair bits from a seeded generator; identical seeds give
// identical streams on every platform.
class SeededBits : public BitSource {
public:
  explicit SeededBits(std::uint64_t seed);

private:
  std::optional<int> pull() override;

  std::uint64_t state_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
};

// "seed:<integer>" or a literal bit string.
std::unique_ptr<BitSource> make_bit_source(std::string_view spec);

}  // namespace finstoch
