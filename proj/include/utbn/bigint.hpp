#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace utbn {

/// Minimal arbitrary-precision unsigned integer: just what exact tree counts
/// and the log-based bound checks need (small-factor products, powers of a
/// word-sized base, shifts, comparison, bit length).
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  static BigUint pow2(std::size_t exponent);
  /// base^exponent by repeated word multiplication.
  static BigUint pow(std::uint32_t base, std::uint32_t exponent);

  void mul_small(std::uint32_t factor);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;
  bool is_power_of_two() const;

  /// ceil(log2(x)) for x >= 1.
  std::size_t ceil_log2() const;

  int compare(const BigUint& other) const;
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator==(const BigUint& o) const { return compare(o) == 0; }

  std::string to_string() const;

 private:
  // Little-endian base-2^32 limbs; no trailing zero limbs.
  std::vector<std::uint32_t> limbs_;
};

}  // namespace utbn
