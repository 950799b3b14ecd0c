#pragma once

/*
 * Finite abelian groups as products of cyclic factors C_{d1} x ... x C_{dk}.
 *
 * Elements are residue vectors and are enumerated in mixed-radix
 * lexicographic order (last factor varies fastest), zero first. That order
 * fixes the row/column order of the Cayley matrix and the indexing of every
 * monomial exponent vector in the library.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

using Element = std::vector<int>;

class GroupSpec {
 public:
  explicit GroupSpec(std::vector<int> factors);

  // Parses "c3", "c2xc4", ... ; throws std::invalid_argument.
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  std::string to_string() const;

  // Invariant factors d1 | d2 | ... | dk (trivial factors dropped).
  std::vector<int> canonical_factors() const;
  bool isomorphic_to(const GroupSpec& other) const {
    return canonical_factors() == other.canonical_factors();
  }

  std::vector<Element> elements() const;
  Element element_at(int index) const;
  int index_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element twice(const Element& a) const { return add(a, a); }
  Element zero() const { return Element(factors_.size(), 0); }
  bool is_zero(const Element& a) const;

  // |{g : 2g = a}|
  int doubling_preimage_count(const Element& a) const;
  bool in_2G(const Element& a) const { return doubling_preimage_count(a) > 0; }

  // Sign of the permutation a -> -a on elements().
  int negation_parity() const;

  bool operator==(const GroupSpec& other) const = default;

 private:
  void check(const Element& a) const;

  std::vector<int> factors_;
  int order_ = 1;
};

// Index-level arithmetic tables for hot loops: add[i][j], neg[i], dbl[i]
// are element indices in elements() order.
class GroupTables {
 public:
  explicit GroupTables(const GroupSpec& spec);

  int order() const { return n_; }
  int add(int i, int j) const { return add_[static_cast<std::size_t>(i * n_ + j)]; }
  int neg(int i) const { return neg_[static_cast<std::size_t>(i)]; }
  int twice(int i) const { return add(i, i); }
  int sub(int i, int j) const { return add(i, neg(j)); }
  // r(a) for every index a
  const std::vector<int>& doubling_counts() const { return dbl_count_; }

 private:
  int n_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> dbl_count_;
};

// All abelian groups of order n up to isomorphism, as invariant-factor specs.
std::vector<GroupSpec> abelian_groups_of_order(int n);

bool is_prime_power(int n, int* prime = nullptr, int* exponent = nullptr);

}  // namespace cayley
