#pragma once

/*
 * Irreducible characters of the symmetric group.
 *
 * mn_character evaluates chi^lambda on a conjugacy class by the
 * Murnaghan-Nakayama rule (border-strip removal on beta-sets), memoized in
 * a process-wide table. The closed forms below are the character
 * polynomials in the cycle counts c_1, c_2, c_3 for the near-hook and
 * two-row/three-column shapes used by the immanant theorems.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cayley {

class Partition {
 public:
  Partition() = default;
  // Accepts any order of positive parts; stores them weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }

  Partition conjugate() const;
  std::string to_string() const;  // "4,1,1,1"

  // Shapes used throughout: (n), (1^n), (n-1,1), (2,1^{n-2}), ...
  static Partition row(int n) { return Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  // (head, 1^{n-head}) for 1 <= head <= n
  static Partition hook(int n, int head);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::vector<Partition> partitions_of(int n);

// counts[i] = number of i-cycles, index 0 unused.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> counts);
  static CycleType from_lengths(std::span<const int> lengths);
  static CycleType identity(int n);
  // Cycle type of a permutation given as an image vector.
  static CycleType of(std::span<const int> perm);

  int degree() const { return degree_; }
  int count(int length) const {
    return length >= 1 && length < static_cast<int>(counts_.size()) ? counts_[static_cast<std::size_t>(length)] : 0;
  }
  int sign() const;
  // Cycle lengths weakly decreasing (the class as a partition).
  std::vector<int> lengths() const;
  // |centralizer| = prod_i i^{c_i} c_i!
  std::uint64_t centralizer_order() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> counts_{0};
  int degree_ = 0;
};

// Every conjugacy class of S_n.
std::vector<CycleType> cycle_types_of(int n);

std::int64_t mn_character(const Partition& lambda, const CycleType& mu);
std::int64_t dimension(const Partition& lambda);
std::int64_t hook_length_dimension(const Partition& lambda);

// Polynomial binomial m(m-1)...(m-k+1)/k!, defined for every integer m.
std::int64_t binomial_poly(std::int64_t m, int k);

std::int64_t hook_char_n11(const CycleType& mu);    // chi^{(n-1,1)} = c1 - 1
std::int64_t cohook_char(const CycleType& mu);      // chi^{(2,1^{n-2})}
std::int64_t char_n3_111(const CycleType& mu);      // chi^{(n-3,1^3)}
std::int64_t char_n3_3(const CycleType& mu);        // chi^{(n-3,3)}
std::int64_t twin_diff_char(const CycleType& mu);   // chi^{(4,1^{n-4})} - chi^{(2,2,2,1^{n-6})}

}  // namespace cayley
