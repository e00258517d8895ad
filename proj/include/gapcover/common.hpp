#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapcover {

// Base class for everything this library throws. Validation findings are
// returned as data, not thrown; see instance.hpp.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Exhaustive verifiers and solvers refuse work beyond the budget instead of
// thrashing; exceeding a budget is always a loud error, never a silent skip.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

struct Budget {
  // Elementary checks an exhaustive verifier or exact solver may spend.
  std::uint64_t work = 100'000'000;
  // Universe elements a reduction may materialize.
  std::uint64_t size = 10'000'000;
};

// Deterministic PRNG used everywhere randomness is needed. Fixed algorithm so
// that the same seed gives byte-identical artifacts on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Modulo bias is irrelevant here; determinism is what matters.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

// base^exp, saturating.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Largest power of two <= x; requires x >= 1.
inline std::uint64_t pow2_floor(std::uint64_t x) {
  std::uint64_t p = 1;
  while (p * 2 <= x && p * 2 != 0) p *= 2;
  return p;
}

// Smallest power of two >= x.
inline std::uint64_t pow2_ceil(std::uint64_t x) {
  std::uint64_t p = 1;
  while (p < x) p *= 2;
  return p;
}

// floor(log2(x)) for x >= 1.
inline int log2_floor(std::uint64_t x) {
  int r = 0;
  while (x >>= 1) ++r;
  return r;
}

// Smallest L with 2^L >= x, at least 1.
inline int bits_for(std::uint64_t x) {
  int r = 1;
  while ((std::uint64_t{1} << r) < x) ++r;
  return r;
}

// FNV-1a over raw bytes; used for provenance hashes (reproducibility, not
// cryptography).
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes);

}  // namespace gapcover
