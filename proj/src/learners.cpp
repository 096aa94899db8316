#include "occam/learners.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "occam/errors.hpp"

namespace occam {

Monomial standard_monomial_learn(const std::vector<LabeledExample>& sample,
                                 int n) {
  Monomial m = Monomial::all_literals(n);
  for (const auto& item : sample) {
    if (int(item.value.size()) != n)
      throw std::invalid_argument("example length does not match n");
    if (!item.label) continue;
    for (int i = 0; i < n; ++i) {
      LiteralState& s = m.states[std::size_t(i)];
      if (item.value[std::size_t(i)] == '1') {
        // x_i is true: the literal !x_i is contradicted.
        if (s == LiteralState::Negative)
          s = LiteralState::Absent;
        else if (s == LiteralState::Both)
          s = LiteralState::Positive;
      } else {
        if (s == LiteralState::Positive)
          s = LiteralState::Absent;
        else if (s == LiteralState::Both)
          s = LiteralState::Negative;
      }
    }
  }
  return m;
}

Monomial standard_monomial_learn(const LabeledSample& sample, int n) {
  return standard_monomial_learn(sample.items(), n);
}

Monomial haussler_monomial_learn(const LabeledSample& sample, int n) {
  std::vector<Example> positives, negatives;
  for (const auto& item : sample.distinct()) {
    if (int(item.value.size()) != n)
      throw std::invalid_argument("example length does not match n");
    (item.label ? positives : negatives).push_back(item.value);
  }

  // Literal index 2i = x_{i+1}, 2i+1 = !x_{i+1}.
  auto satisfies = [](int literal, const Example& x) {
    char want = literal % 2 == 0 ? '1' : '0';
    return x[std::size_t(literal / 2)] == want;
  };

  std::vector<int> candidates;
  for (int lit = 0; lit < 2 * n; ++lit) {
    bool ok = true;
    for (const auto& p : positives) {
      if (!satisfies(lit, p)) {
        ok = false;
        break;
      }
    }
    if (ok) candidates.push_back(lit);
  }

  // covers[c] = negatives falsified by candidate c.
  std::vector<std::vector<std::size_t>> covers(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t j = 0; j < negatives.size(); ++j) {
      if (!satisfies(candidates[c], negatives[j])) covers[c].push_back(j);
    }
  }

  std::vector<bool> covered(negatives.size(), false);
  std::size_t remaining = negatives.size();
  std::vector<int> chosen;
  while (remaining > 0) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t j : covers[c]) {
        if (!covered[j]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == candidates.size())
      throw InfeasibleError(
          "sample is not realizable by a monomial: negatives left uncovered");
    chosen.push_back(candidates[best]);
    for (std::size_t j : covers[best]) {
      if (!covered[j]) {
        covered[j] = true;
        --remaining;
      }
    }
  }

  Monomial m = Monomial::always_true(n);
  for (int lit : chosen) {
    LiteralState& s = m.states[std::size_t(lit / 2)];
    LiteralState want =
        lit % 2 == 0 ? LiteralState::Positive : LiteralState::Negative;
    if (s == LiteralState::Absent)
      s = want;
    else if (s != want)
      s = LiteralState::Both;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Overlaps and greedy merging

namespace {

constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;
constexpr std::uint64_t kBase = 1000003;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  using u128 = unsigned __int128;
  return std::uint64_t(u128(a) * b % kMod);
}

std::vector<std::uint64_t>& power_table(std::size_t need) {
  static std::vector<std::uint64_t> pw{1};
  while (pw.size() <= need) pw.push_back(mulmod(pw.back(), kBase));
  return pw;
}

struct HashedString {
  std::string text;
  std::vector<std::uint64_t> prefix;  // prefix[i] = hash of text[0..i)

  explicit HashedString(std::string s) : text(std::move(s)) {
    prefix.resize(text.size() + 1);
    prefix[0] = 0;
    for (std::size_t i = 0; i < text.size(); ++i)
      prefix[i + 1] =
          (mulmod(prefix[i], kBase) + std::uint8_t(text[i]) + 1) % kMod;
    power_table(text.size());
  }

  std::uint64_t range_hash(std::size_t begin, std::size_t end) const {
    const auto& pw = power_table(text.size());
    std::uint64_t cut = mulmod(prefix[begin], pw[end - begin]);
    return (prefix[end] + kMod - cut) % kMod;
  }
};

std::size_t hashed_overlap(const HashedString& a, const HashedString& b) {
  std::size_t limit = std::min(a.text.size(), b.text.size());
  for (std::size_t j = limit; j > 0; --j) {
    if (a.range_hash(a.text.size() - j, a.text.size()) != b.range_hash(0, j))
      continue;
    if (std::memcmp(a.text.data() + (a.text.size() - j), b.text.data(), j) ==
        0)
      return j;
  }
  return 0;
}

// Lexicographic comparison of the two virtual merges a1+b1[ov1:] and
// a2+b2[ov2:] without materializing them.
bool merged_less(const std::string& a1, const std::string& b1, std::size_t ov1,
                 const std::string& a2, const std::string& b2,
                 std::size_t ov2) {
  std::size_t len1 = a1.size() + b1.size() - ov1;
  std::size_t len2 = a2.size() + b2.size() - ov2;
  auto at = [](const std::string& a, const std::string& b, std::size_t ov,
               std::size_t k) {
    return k < a.size() ? a[k] : b[ov + (k - a.size())];
  };
  std::size_t limit = std::min(len1, len2);
  for (std::size_t k = 0; k < limit; ++k) {
    char c1 = at(a1, b1, ov1, k), c2 = at(a2, b2, ov2, k);
    if (c1 != c2) return c1 < c2;
  }
  return len1 < len2;
}

constexpr std::size_t kMaxMergePool = 3000;

}  // namespace

std::size_t max_overlap(const std::string& a, const std::string& b) {
  return hashed_overlap(HashedString(a), HashedString(b));
}

std::string greedy_merge(std::vector<std::string> strings) {
  // Deduplicate, drop substrings of other entries, and fix a scan order.
  std::sort(strings.begin(), strings.end());
  strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
  if (strings.empty())
    throw std::invalid_argument("greedy merge needs a nonempty string set");
  {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < strings.size() && !contained; ++j) {
        if (i == j || strings[j].size() < strings[i].size()) continue;
        if (strings[j].size() == strings[i].size()) continue;  // distinct
        if (strings[j].find(strings[i]) != std::string::npos) contained = true;
      }
      if (!contained) kept.push_back(strings[i]);
    }
    strings = std::move(kept);
  }
  if (strings.size() > kMaxMergePool)
    throw InfeasibleError("substring pool too large for desk-scale merge");

  std::vector<HashedString> pool;
  pool.reserve(strings.size());
  for (auto& s : strings) pool.emplace_back(std::move(s));
  std::vector<bool> alive(pool.size(), true);
  std::size_t alive_count = pool.size();

  std::vector<std::vector<std::size_t>> ov(
      pool.size(), std::vector<std::size_t>(pool.size(), 0));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (i != j) ov[i][j] = hashed_overlap(pool[i], pool[j]);
    }
  }

  while (alive_count > 1) {
    bool have = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (i == j || !alive[j]) continue;
        if (!have || ov[i][j] > ov[bi][bj]) {
          have = true;
          bi = i;
          bj = j;
          continue;
        }
        if (ov[i][j] == ov[bi][bj] &&
            merged_less(pool[i].text, pool[j].text, ov[i][j], pool[bi].text,
                        pool[bj].text, ov[bi][bj]))
          // Equal merges fall through to the (i,j) order, which the outer
          // loops already visit ascending.
          bi = i, bj = j;
      }
    }
    std::string merged = pool[bi].text;
    merged.append(pool[bj].text, ov[bi][bj],
                  pool[bj].text.size() - ov[bi][bj]);
    alive[bj] = false;
    --alive_count;
    pool[bi] = HashedString(std::move(merged));
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!alive[k] || k == bi) continue;
      ov[bi][k] = hashed_overlap(pool[bi], pool[k]);
      ov[k][bi] = hashed_overlap(pool[k], pool[bi]);
    }
  }

  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (alive[i]) return pool[i].text;
  }
  throw std::logic_error("merge pool drained");
}

SuperstringRep greedy_superstring(const std::vector<std::string>& strings) {
  if (strings.empty())
    throw std::invalid_argument("greedy merge needs a nonempty string set");
  std::size_t window = strings.front().size();
  for (const auto& s : strings) {
    if (s.size() != window)
      throw std::invalid_argument(
          "superstring learning expects equal-length examples");
  }
  return SuperstringRep{greedy_merge(strings), int(window)};
}

// ---------------------------------------------------------------------------
// Brute-force consistent search

std::optional<Representation> consistent_bruteforce(const LabeledSample& sample,
                                                    SystemId system, int n,
                                                    int max_size) {
  switch (system) {
    case SystemId::Monomial: {
      if (n < 1 || n > 12)
        throw InfeasibleError("monomial enumeration limited to n <= 12");
      std::uint64_t size = monomial_class_size(n);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        Representation rep = monomial_by_index(idx, n);
        if (consistent_with(rep, sample)) return rep;
      }
      return std::nullopt;
    }
    case SystemId::Threshold: {
      if (n < 1 || n > 4)
        throw InfeasibleError("circuit enumeration limited to n <= 4");
      if (max_size < 1 || max_size > 3)
        throw InfeasibleError("circuit enumeration limited to <= 3 gates");
      CircuitEnvelope env{n, max_size, 3, -2, 2};
      std::optional<Representation> best;
      std::size_t best_bits = 0;
      std::uint64_t visited = 0;
      constexpr std::uint64_t kVisitCap = 20'000'000;
      bool capped = false;
      for_each_circuit(env, [&](const ThresholdCircuit& c) {
        if (++visited > kVisitCap) {
          capped = true;
          return false;
        }
        Representation rep = c;
        std::size_t bits = representation_length_bits(rep);
        if (best && bits >= best_bits) return true;
        if (consistent_with(rep, sample)) {
          best = rep;
          best_bits = bits;
        }
        return true;
      });
      if (capped) throw InfeasibleError("circuit enumeration bound exceeded");
      return best;
    }
    default:
      throw InfeasibleError(
          "consistent enumeration supports monomial and threshold systems");
  }
}

}  // namespace occam
