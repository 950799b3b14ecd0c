#include "cayley/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cayley {

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (int d : factors_) {
    if (d < 2) throw std::invalid_argument("cyclic factor order must be >= 2, got " + std::to_string(d));
    if (order_ > (1 << 20) / d) throw std::invalid_argument("group order too large");
    order_ *= d;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('x', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    if (token.size() < 2 || token[0] != 'c')
      throw std::invalid_argument("malformed group spec '" + std::string(text) + "'");
    int d = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), d);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed cyclic factor '" + std::string(token) + "'");
    factors.push_back(d);
    pos = end + 1;
  }
  return GroupSpec(std::move(factors));
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'c' + std::to_string(factors_[i]);
  }
  return out;
}

std::vector<int> GroupSpec::canonical_factors() const {
  // Split each factor into prime powers, then rebuild invariant factors
  // from the largest prime power of each prime upward.
  std::map<int, std::vector<int>> by_prime;
  for (int d : factors_) {
    for (int p = 2; d > 1; ++p) {
      if (d % p) continue;
      int q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      by_prime[p].push_back(q);
    }
  }
  std::size_t width = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    width = std::max(width, powers.size());
  }
  std::vector<int> inv(width, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) inv[width - 1 - i] *= powers[i];
  return inv;
}

std::vector<Element> GroupSpec::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

Element GroupSpec::element_at(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
  Element a(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    a[i] = index % factors_[i];
    index /= factors_[i];
  }
  return a;
}

int GroupSpec::index_of(const Element& a) const {
  check(a);
  int index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + a[i];
  return index;
}

void GroupSpec::check(const Element& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("element has wrong number of residues");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i]) throw std::invalid_argument("residue out of range");
}

Element GroupSpec::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

Element GroupSpec::neg(const Element& a) const {
  check(a);
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
  return c;
}

bool GroupSpec::is_zero(const Element& a) const {
  check(a);
  return std::all_of(a.begin(), a.end(), [](int r) { return r == 0; });
}

int GroupSpec::doubling_preimage_count(const Element& a) const {
  check(a);
  // Componentwise: 2g = a in C_d has gcd(2,d) solutions if gcd(2,d) | a.
  int count = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (factors_[i] % 2) continue;
    if (a[i] % 2) return 0;
    count *= 2;
  }
  return count;
}

int GroupSpec::negation_parity() const {
  int n = order_;
  int fixed = 0;
  for (int i = 0; i < n; ++i)
    if (index_of(neg(element_at(i))) == i) ++fixed;
  // a -> -a is an involution: (n - fixed)/2 transpositions.
  int cycles = fixed + (n - fixed) / 2;
  return (n - cycles) % 2 ? -1 : 1;
}

GroupTables::GroupTables(const GroupSpec& spec) : n_(spec.order()) {
  auto elems = spec.elements();
  add_.resize(static_cast<std::size_t>(n_ * n_));
  neg_.resize(static_cast<std::size_t>(n_));
  dbl_count_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j)
      add_[static_cast<std::size_t>(i * n_ + j)] = spec.index_of(spec.add(elems[i], elems[j]));
    neg_[static_cast<std::size_t>(i)] = spec.index_of(spec.neg(elems[i]));
  }
  for (int i = 0; i < n_; ++i) ++dbl_count_[static_cast<std::size_t>(add(i, i))];
}

namespace {

void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_into(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(int n) {
  if (n < 2) throw std::invalid_argument("group order must be >= 2");
  // Per prime p^e: one group per partition of e.
  std::vector<std::vector<std::vector<int>>> per_prime;  // list of options, each a list of prime powers
  int m = n;
  for (int p = 2; m > 1; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_into(e, e, cur, parts);
    std::vector<std::vector<int>> options;
    for (const auto& part : parts) {
      std::vector<int> powers;
      for (int k : part) {
        int q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        powers.push_back(q);
      }
      options.push_back(powers);
    }
    per_prime.push_back(options);
  }
  std::vector<GroupSpec> out;
  std::vector<int> pick(per_prime.size(), 0);
  while (true) {
    std::vector<int> factors;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      for (int q : per_prime[i][static_cast<std::size_t>(pick[i])]) factors.push_back(q);
    out.emplace_back(GroupSpec(GroupSpec(factors).canonical_factors()));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < static_cast<int>(per_prime[i].size())) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

bool is_prime_power(int n, int* prime, int* exponent) {
  if (n < 2) return false;
  int p = 2;
  while (n % p) ++p;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = e;
  return true;
}

}  // namespace cayley
