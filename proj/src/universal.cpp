#include "gapcover/universal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gapcover {

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Lexicographic unranking of a k-combination of [0,n).
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
  std::vector<int> c(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t block = binomial(n - 1 - x, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    c[i] = x++;
  }
  return c;
}

// MSB of the pattern corresponds to the smallest position.
std::uint64_t extract_pattern(const BitString& s, const std::vector<int>& positions0) {
  std::uint64_t pattern = 0;
  for (int p : positions0) pattern = (pattern << 1) | static_cast<std::uint64_t>(s.bit(p + 1));
  return pattern;
}

void check_invariants(const UniversalSet& us) {
  if (us.k < 0 || us.k > us.n)
    throw ValidationError("universal set: k=" + std::to_string(us.k) + " out of range for n=" + std::to_string(us.n));
  std::set<std::string> seen;
  for (const auto& s : us.strings) {
    if (s.length != us.n)
      throw ValidationError("universal set: string of length " + std::to_string(s.length) + ", expected " +
                            std::to_string(us.n));
    if (!seen.insert(s.to_string()).second) throw ValidationError("universal set: duplicate string " + s.to_string());
  }
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

int smallest_prime_at_least(int x) {
  int p = std::max(x, 2);
  while (!is_prime(p)) ++p;
  return p;
}

// Quadratic-residue rows over GF(p), truncated to n columns. Inside the
// k*2^k <= sqrt(n) regime these rows already realize every configuration;
// the caller prunes them down to a verified core.
std::vector<BitString> paley_rows(int n) {
  int p = smallest_prime_at_least(n);
  std::vector<bool> qr(p, false);
  qr[0] = true;
  for (int x = 1; x < p; ++x) qr[static_cast<long long>(x) * x % p] = true;
  std::vector<BitString> rows;
  rows.reserve(p);
  for (int i = 0; i < p; ++i) {
    BitString s(n);
    for (int j = 1; j <= n; ++j)
      if (qr[(i + j - 1) % p]) s.set_bit(j, true);
    rows.push_back(std::move(s));
  }
  return rows;
}

// Witness bookkeeping over (k-subset, pattern) slots, used by the builder to
// add rows greedily and prune redundant ones.
class CoverageTable {
 public:
  CoverageTable(int n, int k) : n_(n), k_(k), num_subsets_(binomial(n, k)), patterns_(std::uint64_t{1} << k) {
    counts_.assign(num_subsets_ * patterns_, 0);
    uncovered_ = counts_.size();
  }

  std::uint64_t uncovered() const { return uncovered_; }

  template <typename Fn>
  void for_each_slot(const BitString& s, Fn&& fn) const {
    auto combo = first_combination(k_);
    std::uint64_t rank = 0;
    do {
      fn(rank * patterns_ + extract_pattern(s, combo));
      ++rank;
    } while (next_combination(combo, n_));
  }

  std::uint64_t new_coverage(const BitString& s) const {
    std::uint64_t gain = 0;
    for_each_slot(s, [&](std::uint64_t slot) { gain += counts_[slot] == 0; });
    return gain;
  }

  void add(const BitString& s) {
    for_each_slot(s, [&](std::uint64_t slot) { uncovered_ -= counts_[slot]++ == 0; });
  }

  bool removable(const BitString& s) const {
    bool ok = true;
    for_each_slot(s, [&](std::uint64_t slot) { ok = ok && counts_[slot] >= 2; });
    return ok;
  }

  void remove(const BitString& s) {
    for_each_slot(s, [&](std::uint64_t slot) { --counts_[slot]; });
  }

  // Direct repair string for the first uncovered slot: those k bits take the
  // missing pattern, everything else is zero.
  BitString repair_string() const {
    std::uint64_t slot = 0;
    while (counts_[slot] != 0) ++slot;
    auto combo = unrank_combination(slot / patterns_, n_, k_);
    std::uint64_t pattern = slot % patterns_;
    BitString s(n_);
    for (int i = 0; i < k_; ++i) s.set_bit(combo[i] + 1, (pattern >> (k_ - 1 - i)) & 1);
    return s;
  }

 private:
  int n_, k_;
  std::uint64_t num_subsets_, patterns_;
  std::uint64_t uncovered_ = 0;
  std::vector<std::uint32_t> counts_;
};

BitString random_string(int n, SplitMix64& rng) {
  BitString s(n);
  for (auto& w : s.words) w = rng.next();
  int tail = n % 64;
  if (tail != 0 && !s.words.empty()) s.words.back() &= (std::uint64_t{1} << tail) - 1;
  return s;
}

// All-zero, all-one, and the binary-code columns with their complements.
// For k <= 2 these alone realize every configuration on every index pair,
// which keeps fallback sets small enough to back gadget matrices.
std::vector<BitString> structured_seed_rows(int n) {
  std::vector<BitString> rows;
  std::set<std::string> seen;
  auto push = [&](BitString s) {
    if (seen.insert(s.to_string()).second) rows.push_back(std::move(s));
  };
  push(BitString(n));
  BitString ones(n);
  for (int j = 1; j <= n; ++j) ones.set_bit(j, true);
  push(std::move(ones));
  for (int bit = 0; bit < bits_for(static_cast<std::uint64_t>(std::max(n, 1))); ++bit) {
    BitString code(n), comp(n);
    for (int j = 1; j <= n; ++j) {
      bool b = ((j - 1) >> bit) & 1;
      code.set_bit(j, b);
      comp.set_bit(j, !b);
    }
    push(std::move(code));
    push(std::move(comp));
  }
  return rows;
}

}  // namespace

std::string UniversalCounterexample::pattern_string() const {
  std::string s(positions.size(), '0');
  for (std::size_t i = 0; i < positions.size(); ++i)
    if ((missing_pattern >> (positions.size() - 1 - i)) & 1) s[i] = '1';
  return s;
}

UniversalVerifyResult verify_universal(const UniversalSet& us, const Budget& budget) {
  check_invariants(us);
  if (us.k == 0) {
    if (!us.strings.empty()) return {true, std::nullopt};
    return {false, UniversalCounterexample{{}, 0}};
  }
  std::uint64_t patterns = std::uint64_t{1} << us.k;
  std::uint64_t work = saturating_mul(binomial(us.n, us.k), patterns);
  if (work > budget.work)
    throw BudgetError("verify_universal: C(n,k)*2^k = " + std::to_string(work) + " exceeds work budget " +
                      std::to_string(budget.work));

  std::vector<std::uint64_t> seen((patterns + 63) / 64);
  auto combo = first_combination(us.k);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t found = 0;
    for (const auto& s : us.strings) {
      std::uint64_t pat = extract_pattern(s, combo);
      std::uint64_t& word = seen[pat >> 6];
      std::uint64_t bit = std::uint64_t{1} << (pat & 63);
      if (!(word & bit)) {
        word |= bit;
        if (++found == patterns) break;
      }
    }
    if (found < patterns) {
      std::uint64_t missing = 0;
      while ((seen[missing >> 6] >> (missing & 63)) & 1) ++missing;
      UniversalCounterexample cx;
      for (int p : combo) cx.positions.push_back(p + 1);
      cx.missing_pattern = missing;
      return {false, cx};
    }
  } while (next_combination(combo, us.n));
  return {true, std::nullopt};
}

UniversalSet build_universal(int n, int k, std::uint64_t seed, const Budget& budget) {
  if (k < 0) throw Error("build_universal: k must be >= 0");
  if (k > n) throw Error("build_universal: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  UniversalSet us;
  us.n = n;
  us.k = k;
  if (k == 0) {
    us.strings.push_back(BitString(n));
    return us;
  }

  std::uint64_t slots = saturating_mul(binomial(n, k), std::uint64_t{1} << k);
  // The builder keeps a witness count per slot, so it is capped tighter than
  // the streaming verifier.
  constexpr std::uint64_t kMaxBuildSlots = std::uint64_t{1} << 23;
  if (slots > budget.work || slots > kMaxBuildSlots)
    throw BudgetError("build_universal: constraint space C(n,k)*2^k = " + std::to_string(slots) +
                      " exceeds budget " + std::to_string(std::min<std::uint64_t>(budget.work, kMaxBuildSlots)));

  bool qr_regime =
      saturating_mul(static_cast<std::uint64_t>(k) << k, static_cast<std::uint64_t>(k) << k) <= static_cast<std::uint64_t>(n);

  CoverageTable table(n, k);
  // Truncating QR rows to n columns can merge two shifts; keep one of each.
  std::vector<BitString> rows;
  {
    std::set<std::string> seen;
    for (auto& r : qr_regime ? paley_rows(n) : structured_seed_rows(n))
      if (seen.insert(r.to_string()).second) rows.push_back(std::move(r));
  }
  for (const auto& r : rows) table.add(r);

  SplitMix64 rng(seed);
  constexpr int kBatch = 32;
  while (table.uncovered() > 0) {
    BitString best(n);
    std::uint64_t best_gain = 0;
    for (int c = 0; c < kBatch; ++c) {
      BitString candidate = random_string(n, rng);
      std::uint64_t gain = table.new_coverage(candidate);
      if (gain > best_gain) {
        best_gain = gain;
        best = std::move(candidate);
      }
    }
    if (best_gain == 0) best = table.repair_string();
    table.add(best);
    rows.push_back(std::move(best));
  }

  // Deterministic prune, newest rows first; a row stays only if it is the
  // sole witness of some slot.
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = rows.size(); i-- > 0;) {
    if (table.removable(rows[i])) {
      table.remove(rows[i]);
      keep[i] = false;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) us.strings.push_back(rows[i]);

  auto check = verify_universal(us, budget);
  if (!check.ok) throw Error("build_universal: constructed set failed verification (construction bug)");
  if (qr_regime && us.strings.size() > static_cast<std::size_t>(n))
    throw Error("build_universal: quadratic-residue route produced " + std::to_string(us.strings.size()) +
                " strings, over the size-n bound");
  return us;
}

SizeBoundReport size_bound_report(int n, int k, std::uint64_t seed, const Budget& budget) {
  SizeBoundReport r;
  r.n = n;
  r.k = k;
  bool qr = k >= 0 && saturating_mul(static_cast<std::uint64_t>(k) << k, static_cast<std::uint64_t>(k) << k) <=
                          static_cast<std::uint64_t>(n);
  r.regime = qr ? "quadratic-residue" : "fallback";
  r.size_n_bound = static_cast<std::uint64_t>(n);
  double ln_n = n >= 1 ? std::log(static_cast<double>(n)) : 0.0;
  r.fallback_bound =
      k >= 0 ? static_cast<std::uint64_t>(std::ceil((std::uint64_t{1} << k) * static_cast<double>(k) * ln_n)) +
                   (std::uint64_t{1} << k)
             : 0;
  auto us = build_universal(n, k, seed, budget);
  r.achieved_size = us.strings.size();
  r.within_size_n_bound = r.achieved_size <= static_cast<std::size_t>(n);
  return r;
}

std::string serialize_universal(const UniversalSet& us) {
  std::ostringstream os;
  os << us.n << " " << us.k << " " << us.strings.size() << "\n";
  for (const auto& s : us.strings) os << s.to_string() << "\n";
  return os.str();
}

UniversalSet deserialize_universal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw ParseError("universal set: empty file", lineno);
  std::istringstream header(line);
  UniversalSet us;
  long count = 0;
  header >> us.n >> us.k >> count;
  if (header.fail() || us.n < 0 || count < 0) throw ParseError("universal set: malformed header '" + line + "'", lineno);
  for (long i = 0; i < count; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("universal set: truncated file", lineno);
    if (static_cast<int>(line.size()) != us.n)
      throw ParseError("universal set: string of length " + std::to_string(line.size()) + ", expected " +
                           std::to_string(us.n),
                       lineno);
    us.strings.push_back(BitString::from_string(line));
  }
  return us;
}

}  // namespace gapcover
