#include "utbn/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace utbn {

BigUint::BigUint(std::uint64_t value) {
  while (value) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
    value >>= 32;
  }
}

BigUint BigUint::pow2(std::size_t exponent) {
  BigUint out;
  out.limbs_.assign(exponent / 32 + 1, 0);
  out.limbs_.back() = std::uint32_t{1} << (exponent % 32);
  return out;
}

BigUint BigUint::pow(std::uint32_t base, std::uint32_t exponent) {
  BigUint out(1);
  for (std::uint32_t i = 0; i < exponent; ++i) out.mul_small(base);
  return out;
}

void BigUint::mul_small(std::uint32_t factor) {
  if (factor == 0 || is_zero()) {
    limbs_.clear();
    return;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t prod = std::uint64_t{limb} * factor + carry;
    limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
    carry = prod >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
}

std::size_t BigUint::bit_length() const {
  if (is_zero()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::is_power_of_two() const {
  if (is_zero()) return false;
  if (limbs_.back() & (limbs_.back() - 1)) return false;
  for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
    if (limbs_[i]) return false;
  return true;
}

std::size_t BigUint::ceil_log2() const {
  if (is_zero()) throw std::domain_error("ceil_log2(0)");
  return is_power_of_two() ? bit_length() - 1 : bit_length();
}

int BigUint::compare(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  return 0;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    // Divide by 10^9, collecting the remainder as nine decimal digits.
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace utbn
