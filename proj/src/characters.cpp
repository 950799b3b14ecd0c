#include "cayley/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace cayley {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int head) {
  if (head < 1 || head > n) throw std::invalid_argument("hook head out of range");
  std::vector<int> parts{head};
  parts.insert(parts.end(), static_cast<std::size_t>(n - head), 1);
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) counts_.push_back(0);
  counts_[0] = 0;
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    if (counts_[i] < 0) throw std::invalid_argument("negative cycle count");
    degree_ += static_cast<int>(i) * counts_[i];
  }
  while (counts_.size() > 1 && counts_.back() == 0) counts_.pop_back();
}

CycleType CycleType::from_lengths(std::span<const int> lengths) {
  int max_len = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  std::vector<int> counts(static_cast<std::size_t>(max_len + 1), 0);
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("cycle length must be positive");
    ++counts[static_cast<std::size_t>(l)];
  }
  return CycleType(std::move(counts));
}

CycleType CycleType::identity(int n) {
  std::vector<int> counts(2, 0);
  counts[1] = n;
  return CycleType(std::move(counts));
}

CycleType CycleType::of(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> counts(perm.size() + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    do {
      if (j < 0 || j >= n || seen[static_cast<std::size_t>(j)]) throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
      j = perm[static_cast<std::size_t>(j)];
    } while (j != i);
    ++counts[static_cast<std::size_t>(len)];
  }
  return CycleType(std::move(counts));
}

int CycleType::sign() const {
  int odd = 0;
  for (std::size_t i = 2; i < counts_.size(); i += 2) odd += counts_[i];
  return odd % 2 ? -1 : 1;
}

std::vector<int> CycleType::lengths() const {
  std::vector<int> out;
  for (std::size_t i = counts_.size(); i-- > 1;) out.insert(out.end(), static_cast<std::size_t>(counts_[i]), static_cast<int>(i));
  return out;
}

std::uint64_t CycleType::centralizer_order() const {
  std::uint64_t z = 1;
  for (std::size_t i = 1; i < counts_.size(); ++i)
    for (int k = 1; k <= counts_[i]; ++k) z *= static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(k);
  return z;
}

std::vector<CycleType> cycle_types_of(int n) {
  std::vector<CycleType> out;
  for (const auto& p : partitions_of(n)) out.push_back(CycleType::from_lengths(p.parts()));
  return out;
}

namespace {

using Beta = std::vector<int>;  // strictly decreasing

Beta beta_set(const std::vector<int>& parts) {
  const int l = static_cast<int>(parts.size());
  Beta beta(parts.size());
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (l - 1 - i);
  return beta;
}

std::vector<int> parts_of_beta(Beta beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

struct MnKey {
  std::vector<int> parts;
  std::vector<int> lengths;
  auto operator<=>(const MnKey&) const = default;
};

class MnMemo {
 public:
  std::int64_t eval(const std::vector<int>& parts, const std::vector<int>& lengths) {
    int weight = std::accumulate(parts.begin(), parts.end(), 0);
    if (weight == 0) return 1;
    MnKey key{parts, lengths};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    // Strip the first (longest) cycle length as a border strip.
    const int k = lengths.front();
    std::vector<int> rest(lengths.begin() + 1, lengths.end());
    Beta beta = beta_set(parts);
    std::int64_t value = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int target = beta[i] - k;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      Beta moved = beta;
      moved[i] = target;
      std::int64_t sub = eval(parts_of_beta(std::move(moved)), rest);
      value += (between % 2 ? -sub : sub);
    }
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<MnKey, std::int64_t> table_;
};

MnMemo& memo() {
  static MnMemo instance;
  return instance;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.weight() != mu.degree())
    throw std::invalid_argument("character weight mismatch: |lambda|=" + std::to_string(lambda.weight()) +
                                " but class degree " + std::to_string(mu.degree()));
  return memo().eval(lambda.parts(), mu.lengths());
}

std::int64_t dimension(const Partition& lambda) { return mn_character(lambda, CycleType::identity(lambda.weight())); }

std::int64_t hook_length_dimension(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const auto cols = lambda.conjugate().parts();
  if (lambda.weight() > 20) throw std::invalid_argument("hook length formula limited to n <= 20");
  std::int64_t num = 1;
  for (int i = 2; i <= lambda.weight(); ++i) num *= i;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      den *= arm + leg + 1;
    }
  return num / den;
}

std::int64_t binomial_poly(std::int64_t m, int k) {
  if (k < 0) return 0;
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (m - i);
    den *= (i + 1);
  }
  return num / den;
}

std::int64_t hook_char_n11(const CycleType& mu) { return mu.count(1) - 1; }

std::int64_t cohook_char(const CycleType& mu) { return mu.sign() * (mu.count(1) - 1); }

std::int64_t char_n3_111(const CycleType& mu) {
  const std::int64_t c1 = mu.count(1), c2 = mu.count(2), c3 = mu.count(3);
  return binomial_poly(c1 - 1, 3) - (c1 - 1) * c2 + c3;
}

std::int64_t char_n3_3(const CycleType& mu) {
  const std::int64_t c1 = mu.count(1), c2 = mu.count(2), c3 = mu.count(3);
  return binomial_poly(c1, 3) - binomial_poly(c1, 2) + (c1 - 1) * c2 + c3;
}

std::int64_t twin_diff_char(const CycleType& mu) {
  if (mu.degree() < 6) throw std::invalid_argument("twin character difference needs n >= 6");
  const std::int64_t c1 = mu.count(1), c2 = mu.count(2);
  return mu.sign() * (c1 - 1) * (1 - 2 * c2);
}

}  // namespace cayley
