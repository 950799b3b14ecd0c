#include "cayley/immanant.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace cayley {

namespace {

// Exponents and cycle counts never exceed n <= kEnumerationLimit < 16, so
// both pack into 4-bit nibbles.
constexpr int kNibble = 4;
constexpr int kClassShift = kNibble * 12;
static_assert(kEnumerationLimit <= 12, "packed monomial keys assume n <= 12");

using PackedTally = std::unordered_map<std::uint64_t, std::int64_t>;

struct SweepContext {
  const GroupTables& tables;
  const std::unordered_map<std::uint64_t, std::size_t>& class_index;

  std::uint64_t monomial_key(const int* sigma) const {
    std::uint64_t key = 0;
    for (int a = 0; a < tables.order(); ++a) key += std::uint64_t{1} << (kNibble * tables.add(a, sigma[a]));
    return key;
  }

  std::size_t class_of(const int* sigma) const {
    const int n = tables.order();
    std::uint32_t seen = 0;
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) {
      if (seen >> i & 1U) continue;
      int len = 0;
      for (int j = i; !(seen >> j & 1U); j = sigma[j]) {
        seen |= 1U << j;
        ++len;
      }
      key += std::uint64_t{1} << (kNibble * (len - 1));
    }
    return class_index.at(key);
  }
};

std::uint64_t cycle_key(const CycleType& ct) {
  std::uint64_t key = 0;
  for (int len = 1; len <= ct.degree(); ++len)
    key += static_cast<std::uint64_t>(ct.count(len)) << (kNibble * (len - 1));
  return key;
}

void sweep_first_values(const SweepContext& ctx, const std::vector<int>& firsts, PackedTally& out) {
  const int n = ctx.tables.order();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int first : firsts) {
    sigma[0] = first;
    for (int i = 0, k = 1; i < n; ++i)
      if (i != first) sigma[static_cast<std::size_t>(k++)] = i;
    do {
      std::uint64_t key = ctx.monomial_key(sigma.data()) |
                          (static_cast<std::uint64_t>(ctx.class_of(sigma.data())) << kClassShift);
      ++out[key];
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  }
}

std::uint64_t lehmer_rank(const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma[j] < sigma[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

// Orbits of sigma -> t_g sigma t_g^{-1}. Cycle type is constant on an orbit,
// so it is computed once per representative; each distinct image still gets
// its own monomial, which is the representative's shifted by 2g.
void sweep_orbits(const SweepContext& ctx, PackedTally& out) {
  const int n = ctx.tables.order();
  std::uint64_t total = 1;
  for (int i = 2; i <= n; ++i) total *= static_cast<std::uint64_t>(i);
  std::vector<bool> visited(total, false);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  // next_permutation visits ranks 0, 1, 2, ... in order
  std::uint64_t rank = 0;
  do {
    if (!visited[rank]) {
      const auto cls = static_cast<std::uint64_t>(ctx.class_of(sigma.data())) << kClassShift;
      for (int g = 0; g < n; ++g) {
        auto image = conjugate_by_translation(ctx.tables, g, sigma);
        auto r = lehmer_rank(image);
        if (visited[r]) continue;
        visited[r] = true;
        ++out[ctx.monomial_key(image.data()) | cls];
      }
    }
    ++rank;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

Monomial unpack_monomial(std::uint64_t key, int n) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) m.exponents[static_cast<std::size_t>(i)] = static_cast<int>(key >> (kNibble * i) & 0xF);
  return m;
}

}  // namespace

unsigned worker_count() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("IMM_THREADS")) {
    try {
      int requested = std::stoi(env);
      if (requested > 0) return static_cast<unsigned>(requested);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

std::vector<int> translate_conjugate(const GroupTables& tables, int g, std::span<const int> sigma) {
  const int n = tables.order();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    out[static_cast<std::size_t>(u)] = tables.sub(sigma[static_cast<std::size_t>(tables.sub(u, g))], g);
  return out;
}

std::vector<int> conjugate_by_translation(const GroupTables& tables, int g, std::span<const int> sigma) {
  const int n = tables.order();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    out[static_cast<std::size_t>(u)] = tables.add(sigma[static_cast<std::size_t>(tables.sub(u, g))], g);
  return out;
}

ClassTally sweep(const GroupSpec& spec, SweepMode mode) {
  const int n = spec.order();
  if (n > kEnumerationLimit)
    throw EnvelopeError("full enumeration of S(G) refused for |G| = " + std::to_string(n) + " > " +
                        std::to_string(kEnumerationLimit));
  GroupTables tables(spec);
  auto types = cycle_types_of(n);
  std::unordered_map<std::uint64_t, std::size_t> class_index;
  for (std::size_t i = 0; i < types.size(); ++i) class_index.emplace(cycle_key(types[i]), i);
  SweepContext ctx{tables, class_index};

  PackedTally merged;
  if (mode == SweepMode::orbit) {
    sweep_orbits(ctx, merged);
  } else {
    // Partition the stream by sigma(0); each worker owns a private tally.
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
    std::vector<std::vector<int>> shards(workers);
    for (int f = 0; f < n; ++f) shards[static_cast<std::size_t>(f) % workers].push_back(f);
    std::vector<PackedTally> partial(workers);
    if (workers == 1) {
      sweep_first_values(ctx, shards[0], partial[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { sweep_first_values(ctx, shards[w], partial[w]); });
      for (auto& t : pool) t.join();
    }
    for (auto& part : partial)
      for (const auto& [key, count] : part) merged[key] += count;
  }

  std::vector<ClassTally::Entry> entries;
  entries.reserve(merged.size());
  const std::uint64_t mono_mask = (std::uint64_t{1} << kClassShift) - 1;
  for (const auto& [key, count] : merged)
    entries.push_back({unpack_monomial(key & mono_mask, n), static_cast<std::size_t>(key >> kClassShift), count});
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.monomial, a.cycle_type) < std::tie(b.monomial, b.cycle_type);
  });
  return ClassTally(spec, std::move(types), std::move(entries));
}

GroupPolynomial ClassTally::apply(const ClassFunction& f) const {
  std::vector<mpz_class> weights;
  weights.reserve(types_.size());
  for (const auto& ct : types_) weights.emplace_back(static_cast<long>(f(ct)));
  GroupPolynomial p(spec_);
  for (const auto& e : entries_) p.add_term(e.monomial, weights[e.cycle_type] * static_cast<long>(e.count));
  return p;
}

GroupPolynomial immanant(const GroupSpec& spec, const Partition& lambda, SweepMode mode) {
  if (lambda.weight() != spec.order())
    throw std::invalid_argument("partition " + lambda.to_string() + " is not a partition of |G| = " +
                                std::to_string(spec.order()));
  return sweep(spec, mode).apply([&](const CycleType& ct) { return mn_character(lambda, ct); });
}

GroupPolynomial determinant(const GroupSpec& spec) { return immanant(spec, Partition::column(spec.order())); }

GroupPolynomial permanent(const GroupSpec& spec) { return immanant(spec, Partition::row(spec.order())); }

GroupPolynomial twin_difference(const GroupSpec& spec) {
  if (spec.order() < 6) throw std::invalid_argument("twin immanants need |G| >= 6");
  return sweep(spec).apply(twin_diff_char);
}

PermClassStats perm_class_stats(const GroupSpec& spec, const Monomial& m) {
  const int n = spec.order();
  if (m.exponents.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("monomial length mismatch");
  PermClassStats stats;
  stats.per_a_counts.assign(static_cast<std::size_t>(n), 0);
  stats.per_a_signed.assign(static_cast<std::size_t>(n), 0);
  if (m.degree() != n) return stats;

  GroupTables tables(spec);
  std::vector<int> capacity = m.exponents;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);

  auto leaf = [&] {
    const int sign = CycleType::of(sigma).sign();
    int fix = 0;
    for (int a = 0; a < n; ++a) fix += sigma[static_cast<std::size_t>(a)] == a;
    ++stats.p_m;
    stats.d_m += sign;
    stats.fix_sum += fix;
    stats.signed_fix_sum += sign * fix;
    ++stats.per_a_counts[static_cast<std::size_t>(sigma[0])];
    stats.per_a_signed[static_cast<std::size_t>(sigma[0])] += sign;
  };

  auto assign = [&](auto&& self, int a) -> void {
    if (a == n) {
      leaf();
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      int& cap = capacity[static_cast<std::size_t>(tables.add(a, b))];
      if (cap == 0) continue;
      --cap;
      used[static_cast<std::size_t>(b)] = 1;
      sigma[static_cast<std::size_t>(a)] = b;
      self(self, a + 1);
      used[static_cast<std::size_t>(b)] = 0;
      ++cap;
    }
  };
  assign(assign, 0);
  return stats;
}

}  // namespace cayley
