#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Non-negative integer, base 10^9 limbs, little-endian. Just enough for
// universe-size bookkeeping (m * |U|^ell easily overflows 64 bits in the
// clique pipeline); not a general bignum.
class BigNat {
 public:
  BigNat() : limbs_{0} {}
  explicit BigNat(std::uint64_t v) { assign(v); }

  void assign(std::uint64_t v) {
    limbs_.clear();
    do {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    } while (v > 0);
  }

  void mul_u64(std::uint64_t f) {
    if (f == 0) {
      assign(0);
      return;
    }
    // Split the factor so per-limb products stay inside unsigned 128-bit-free
    // arithmetic: f = hi * 10^9 + lo.
    std::uint64_t lo = f % kBase, hi = f / kBase;
    BigNat res_lo = *this;
    res_lo.mul_small(lo);
    if (hi > 0) {
      BigNat res_hi = *this;
      res_hi.mul_small(hi);
      res_hi.shift_limbs(1);
      res_lo.add(res_hi);
    }
    *this = res_lo;
  }

  void add(const BigNat& other) {
    std::uint64_t carry = 0;
    std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s % kBase);
      carry = s / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  bool fits_u64() const {
    if (limbs_.size() > 3) return false;
    long double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v <= static_cast<long double>(UINT64_MAX);
  }

  std::uint64_t to_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
  }

  std::string to_string() const {
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  double log2() const {
    double v = 0;
    // Only the top few limbs matter for a double.
    std::size_t top = limbs_.size();
    std::size_t stop = top > 3 ? top - 3 : 0;
    for (std::size_t i = top; i-- > stop;) v = v * kBase + limbs_[i];
    return std::log2(v) + 9.0 * std::log2(10.0) * static_cast<double>(stop);
  }

  bool operator<=(std::uint64_t v) const { return fits_u64() && to_u64() <= v; }

  // m * base^exp. Refuses absurd sizes (the decimal expansion itself would be
  // the memory hog) with a BudgetError.
  static BigNat product_power(std::uint64_t m, std::uint64_t base, std::uint64_t exp) {
    double bits = (base <= 1 ? 0.0 : static_cast<double>(exp) * std::log2(static_cast<double>(base))) +
                  std::log2(static_cast<double>(m == 0 ? 1 : m) + 1.0);
    if (bits > 200000.0)
      throw BudgetError("universe size m*|U|^ell needs about " + std::to_string(static_cast<long long>(bits)) +
                        " bits; refusing to expand");
    BigNat r(m);
    for (std::uint64_t i = 0; i < exp; ++i) r.mul_u64(base);
    return r;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ULL;

  void mul_small(std::uint64_t f) {  // f < 10^9
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t p = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(p % kBase);
      carry = p / kBase;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
  }

  void shift_limbs(std::size_t count) {
    if (limbs_.size() == 1 && limbs_[0] == 0) return;
    limbs_.insert(limbs_.begin(), count, 0);
  }

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace gapcover
