#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Binary string stored as machine words; bit index 1 is the least significant
// bit of words[0]. This fixes block slicing in gap_gadget bit-exactly.
struct BitString {
  int length = 0;
  std::vector<std::uint64_t> words;

  explicit BitString(int n = 0) : length(n), words((n + 63) / 64, 0) {}

  bool bit(int index1) const {  // 1-based
    int i = index1 - 1;
    return (words[i >> 6] >> (i & 63)) & 1;
  }
  void set_bit(int index1, bool value) {
    int i = index1 - 1;
    if (value)
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  // Character t of the text form is bit index t+1.
  std::string to_string() const {
    std::string s(length, '0');
    for (int i = 1; i <= length; ++i)
      if (bit(i)) s[i - 1] = '1';
    return s;
  }
  static BitString from_string(const std::string& s) {
    BitString b(static_cast<int>(s.size()));
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      if (s[i] != '0' && s[i] != '1') throw Error("bitstring: bad character '" + std::string(1, s[i]) + "'");
      if (s[i] == '1') b.set_bit(i + 1, true);
    }
    return b;
  }

  bool operator==(const BitString&) const = default;
};

// Set of length-n binary strings whose restriction to any k positions
// realizes all 2^k configurations.
struct UniversalSet {
  int n = 0;
  int k = 0;
  std::vector<BitString> strings;
};

struct UniversalCounterexample {
  std::vector<int> positions;       // 1-based, ascending
  std::uint64_t missing_pattern;    // k bits, most significant bit = smallest position
  std::string pattern_string() const;
};

struct UniversalVerifyResult {
  bool ok = false;
  std::optional<UniversalCounterexample> counterexample;
};

// Exhaustive check over all C(n,k) position subsets and 2^k patterns.
// Throws BudgetError when C(n,k)*2^k exceeds budget.work, ValidationError
// when the type invariants (length, no duplicates, k <= n) fail.
UniversalVerifyResult verify_universal(const UniversalSet& us, const Budget& budget = {});

// Deterministic construction, self-certified by verify_universal before
// returning. When k*2^k <= sqrt(n) the quadratic-residue route applies and
// the result has size <= n; otherwise the greedy fallback bound
// ceil(2^k * k * ln n) + 2^k applies.
UniversalSet build_universal(int n, int k, std::uint64_t seed = 1, const Budget& budget = {});

struct SizeBoundReport {
  int n = 0;
  int k = 0;
  std::string regime;  // "quadratic-residue" or "fallback"
  std::uint64_t size_n_bound = 0;  // the size-n guarantee of the QR route
  std::uint64_t fallback_bound = 0;
  std::size_t achieved_size = 0;
  bool within_size_n_bound = false;
};

SizeBoundReport size_bound_report(int n, int k, std::uint64_t seed = 1, const Budget& budget = {});

// File format: "n k count" then one bitstring per line.
std::string serialize_universal(const UniversalSet& us);
UniversalSet deserialize_universal(const std::string& text);

}  // namespace gapcover
