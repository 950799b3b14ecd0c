#include "cayley/support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

constexpr std::size_t kMaxSequence = 20;

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

int sequence_sum(const GroupTables& tables, std::span<const int> sequence) {
  int s = 0;
  for (int g : sequence) s = tables.add(s, g);
  return s;
}

}  // namespace

std::vector<Monomial> hall_support(const GroupSpec& spec) {
  const int n = spec.order();
  GroupTables tables(spec);
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Assign exponents element by element; the last element takes what is left.
  auto rec = [&](auto&& self, int a, int remaining, int partial) -> void {
    if (a == n - 1) {
      int s = partial;
      for (int k = 0; k < remaining; ++k) s = tables.add(s, a);
      if (s != 0) return;
      exps[static_cast<std::size_t>(a)] = remaining;
      out.push_back(Monomial{exps});
      exps[static_cast<std::size_t>(a)] = 0;
      return;
    }
    int s = partial;
    for (int k = 0; k <= remaining; ++k) {
      exps[static_cast<std::size_t>(a)] = k;
      self(self, a + 1, remaining - k, s);
      s = tables.add(s, a);
    }
    exps[static_cast<std::size_t>(a)] = 0;
  };
  if (n == 1) {
    out.push_back(Monomial{{1}});
  } else {
    rec(rec, 0, n, 0);
  }
  // Exponent of element 0 ascends in the outer loop, so the order is
  // already lexicographic.
  return out;
}

std::vector<int> labelling(const Monomial& m) {
  std::vector<int> seq;
  for (std::size_t g = 0; g < m.exponents.size(); ++g)
    seq.insert(seq.end(), static_cast<std::size_t>(m.exponents[g]), static_cast<int>(g));
  return seq;
}

Monomial multiset_of(const GroupSpec& spec, std::span<const int> sequence) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(spec.order()), 0)};
  for (int g : sequence) {
    if (g < 0 || g >= spec.order()) throw std::invalid_argument("sequence entry is not an element index");
    ++m.exponents[static_cast<std::size_t>(g)];
  }
  return m;
}

void for_each_zero_sum_partition(const GroupSpec& spec, std::span<const int> sequence,
                                 const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const std::size_t len = sequence.size();
  if (len > kMaxSequence) throw std::invalid_argument("sequence too long for set-partition enumeration");
  GroupTables tables(spec);
  for (int g : sequence)
    if (g < 0 || g >= spec.order()) throw std::invalid_argument("sequence entry is not an element index");
  const std::uint32_t full = len == 32 ? ~0U : (1U << len) - 1U;
  std::vector<int> sums(std::size_t{1} << len, 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    int low = std::countr_zero(mask);
    sums[mask] = tables.add(sums[mask & (mask - 1)], sequence[static_cast<std::size_t>(low)]);
  }
  if (sums[full] != 0) return;

  std::vector<std::uint32_t> blocks;
  auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      visit(blocks);
      return;
    }
    const std::uint32_t anchor = remaining & (~remaining + 1U);
    const std::uint32_t rest = remaining ^ anchor;
    // Walk every submask of rest, including the empty one.
    std::uint32_t sub = rest;
    while (true) {
      const std::uint32_t block = sub | anchor;
      if (sums[block] == 0 && sums[remaining ^ block] == 0) {
        blocks.push_back(block);
        self(self, remaining ^ block);
        blocks.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };
  rec(rec, full);
}

ZeroSumCoefficients::ZeroSumCoefficients(GroupSpec spec)
    : spec_(std::move(spec)), tables_(spec_), parity_(spec_.negation_parity()) {
  const int n = spec_.order();
  if (n > static_cast<int>(kMaxSequence)) throw std::invalid_argument("partition sums are limited to |G| <= 20");
  binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0));
  for (int m = 0; m <= n; ++m) {
    binom_[static_cast<std::size_t>(m)][0] = 1;
    for (int k = 1; k <= m; ++k)
      binom_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          binom_[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
          (k < m ? binom_[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)] : 0);
  }
  // (-1)^{b-1} n (b-1)! for a block of size b
  weights_.resize(static_cast<std::size_t>(n + 1));
  for (int b = 1; b <= n; ++b) {
    weights_[static_cast<std::size_t>(b)] = factorial(b - 1) * n;
    if ((b - 1) % 2) weights_[static_cast<std::size_t>(b)] = -weights_[static_cast<std::size_t>(b)];
  }
}

mpz_class ZeroSumCoefficients::partition_sum(const std::string& alpha) {
  const auto anchor = alpha.find_first_not_of('\0');
  if (anchor == std::string::npos) return 1;
  if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;

  std::vector<int> support;
  for (std::size_t g = anchor; g < alpha.size(); ++g)
    if (alpha[g] != 0) support.push_back(static_cast<int>(g));

  mpz_class total = 0;
  mpz_class term;
  std::string rest = alpha;
  // Choose the block holding one fixed copy of the anchor element. The
  // binomials count the position sets realizing each block multiset.
  auto rec = [&](auto&& self, std::size_t i, int block_sum, int block_size, std::int64_t ways) -> void {
    if (i == support.size()) {
      if (block_sum != 0) return;
      term = partition_sum(rest);
      term *= static_cast<long>(ways);
      term *= weights_[static_cast<std::size_t>(block_size)];
      total += term;
      return;
    }
    const int g = support[i];
    const int avail = alpha[static_cast<std::size_t>(g)];
    const bool is_anchor = i == 0;
    int s = is_anchor ? tables_.add(block_sum, g) : block_sum;
    for (int k = is_anchor ? 1 : 0; k <= avail; ++k) {
      rest[static_cast<std::size_t>(g)] = static_cast<char>(avail - k);
      const auto w = is_anchor ? binom_[static_cast<std::size_t>(avail - 1)][static_cast<std::size_t>(k - 1)]
                               : binom_[static_cast<std::size_t>(avail)][static_cast<std::size_t>(k)];
      self(self, i + 1, s, block_size + k, ways * w);
      s = tables_.add(s, g);
    }
    rest[static_cast<std::size_t>(g)] = static_cast<char>(avail);
  };
  rec(rec, 0, 0, 0, 1);
    memo_.emplace(alpha, total);
  return total;
}

mpz_class ZeroSumCoefficients::labelled(std::span<const int> sequence) {
  if (sequence.size() != static_cast<std::size_t>(spec_.order()))
    throw std::invalid_argument("sequence length must equal |G| = " + std::to_string(spec_.order()));
  Monomial m = multiset_of(spec_, sequence);
  if (sequence_sum(tables_, sequence) != 0) return 0;
  std::string key(m.exponents.size(), '\0');
  for (std::size_t g = 0; g < key.size(); ++g) key[g] = static_cast<char>(m.exponents[g]);
  return partition_sum(key);
}

mpz_class ZeroSumCoefficients::det_coeff(const Monomial& m) {
  if (m.exponents.size() != static_cast<std::size_t>(spec_.order()) || m.degree() != spec_.order())
    throw std::invalid_argument("monomial must have degree |G| over G");
  mpz_class value = labelled(labelling(m)) * parity_;
  mpz_class denom = 1;
  for (int e : m.exponents) denom *= factorial(e);
  if (!mpz_divisible_p(value.get_mpz_t(), denom.get_mpz_t()))
    throw std::logic_error("labelled determinant coefficient not divisible by prod alpha_g! for " + m.to_string());
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), value.get_mpz_t(), denom.get_mpz_t());
  return out;
}

mpz_class labelled_det_coeff(const GroupSpec& spec, std::span<const int> sequence) {
  return ZeroSumCoefficients(spec).labelled(sequence);
}

mpz_class det_coeff(const GroupSpec& spec, const Monomial& m) { return ZeroSumCoefficients(spec).det_coeff(m); }

std::int64_t count_P(const GroupSpec& spec) { return static_cast<std::int64_t>(hall_support(spec).size()); }

std::int64_t count_D(const GroupSpec& spec) {
  ZeroSumCoefficients coeffs(spec);
  std::int64_t d = 0;
  for (const auto& m : hall_support(spec))
    if (coeffs.det_coeff(m) != 0) ++d;
  return d;
}

std::int64_t near_hook_numerator(const GroupSpec& spec, const Monomial& m) {
  if (m.exponents.size() != static_cast<std::size_t>(spec.order())) throw std::invalid_argument("monomial length mismatch");
  GroupTables tables(spec);
  const auto& r = tables.doubling_counts();
  std::int64_t total = 0;
  for (std::size_t a = 0; a < m.exponents.size(); ++a) total += static_cast<std::int64_t>(r[a]) * m.exponents[a];
  return total - spec.order();
}

NearHookCoefficients near_hook_coeff(const GroupSpec& spec, const Monomial& m, const PermClassStats& stats) {
  const int n = spec.order();
  if (m.degree() != n) throw std::invalid_argument("monomial must have degree |G|");
  const mpz_class numer = near_hook_numerator(spec, m);
  const mpz_class hook = numer * static_cast<long>(stats.p_m);
  const mpz_class cohook = numer * static_cast<long>(stats.d_m);
  if (hook % n != 0 || cohook % n != 0)
    throw std::logic_error("near-hook coefficient not integral for " + m.to_string());
  return {hook / n, cohook / n};
}

NearHookCounts count_I_nearhook(const GroupSpec& spec, NearHookPath path) {
  const int n = spec.order();
  if (path == NearHookPath::automatic) path = n < kEnumerationLimit ? NearHookPath::enumerate : NearHookPath::formula;
  NearHookCounts counts;
  if (path == NearHookPath::enumerate) {
    for (const auto& m : hall_support(spec)) {
      auto c = near_hook_coeff(spec, m, perm_class_stats(spec, m));
      counts.hook += c.hook != 0;
      counts.cohook += c.cohook != 0;
    }
    return counts;
  }
  ZeroSumCoefficients coeffs(spec);
  for (const auto& m : hall_support(spec)) {
    // Zero-sum m has p_m > 0, and d_m is the determinant coefficient.
    const std::int64_t numer = near_hook_numerator(spec, m);
    if (numer == 0) continue;
    ++counts.hook;
    const mpz_class cohook = numer * coeffs.det_coeff(m);
    if (cohook % n != 0) throw std::logic_error("near-hook coefficient not integral for " + m.to_string());
    counts.cohook += cohook != 0;
  }
  return counts;
}

int legendre(std::int64_t m, int p) {
  int v = 0;
  for (std::int64_t q = p; q <= m; q *= p) v += static_cast<int>(m / q);
  return v;
}

ValuationProfile padic_profile(const GroupSpec& spec, std::span<const int> sequence) {
  const int n = spec.order();
  ValuationProfile profile;
  if (!is_prime_power(n, &profile.p, &profile.r))
    throw std::invalid_argument("p-adic profile needs prime-power order, got " + std::to_string(n));
  if (sequence.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("sequence length must equal |G|");
  GroupTables tables(spec);
  if (sequence_sum(tables, sequence) != 0) throw std::invalid_argument("sequence is not zero-sum");

  std::map<std::vector<int>, std::int64_t> shapes;
  for_each_zero_sum_partition(spec, sequence, [&](std::span<const std::uint32_t> blocks) {
    std::vector<int> sizes;
    for (auto b : blocks) sizes.push_back(std::popcount(b));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    ++shapes[sizes];
  });

  profile.one_block_valuation = profile.r + legendre(n - 1, profile.p);
  profile.min_valuation = profile.one_block_valuation;
  profile.strictly_minimal = true;
  for (const auto& [sizes, count] : shapes) {
    int v = static_cast<int>(sizes.size()) * profile.r;
    for (int b : sizes) v += legendre(b - 1, profile.p);
    profile.terms.push_back({sizes, count, v});
    if (sizes.size() >= 2) {
      profile.min_valuation = std::min(profile.min_valuation, v);
      if (v <= profile.one_block_valuation) profile.strictly_minimal = false;
    }
  }
  return profile;
}

}  // namespace cayley
