#pragma once

/*
 * Supports and coefficients without enumerating S(G).
 *
 *  - hall_support: zero-sum exponent vectors, the permanent support.
 *  - labelled_det_coeff: sum over zero-sum set partitions pi of the
 *    sequence of (-1)^{n-|pi|} n^{|pi|} prod_B (|B|-1)!.
 *  - near_hook_coeff: coefficient of m in imm_{(n-1,1)} and imm_{(2,1^{n-2})}
 *    as ((sum_a r(a) lambda_a - n) / n) * (p_m, d_m).
 *  - padic_profile: p-adic valuations of every term of the partition sum.
 *
 * Sequences are vectors of element indices (GroupSpec::elements() order).
 */

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/immanant.hpp"
#include "cayley/polynomial.hpp"

namespace cayley {

std::vector<Monomial> hall_support(const GroupSpec& spec);

// Lexicographically smallest sequence with multiplicities m.exponents.
std::vector<int> labelling(const Monomial& m);
Monomial multiset_of(const GroupSpec& spec, std::span<const int> sequence);

// Calls visit(blocks) once per zero-sum set partition of the sequence.
// Blocks are bitmasks over sequence positions, each anchored at its least
// position. Sequences longer than 32 are rejected.
void for_each_zero_sum_partition(const GroupSpec& spec, std::span<const int> sequence,
                                 const std::function<void(std::span<const std::uint32_t>)>& visit);

// Memoizes the partition sum over sub-multisets, so one instance can serve
// every monomial of a group.
class ZeroSumCoefficients {
 public:
  explicit ZeroSumCoefficients(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  // (prod alpha_g!) [x_{g1}...x_{gn}] det(A_G) for the sequence g1..gn.
  mpz_class labelled(std::span<const int> sequence);
  // [m] det(M_G)
  mpz_class det_coeff(const Monomial& m);

 private:
  // Multiplicities packed one byte per element.
  mpz_class partition_sum(const std::string& multiplicities);

  GroupSpec spec_;
  GroupTables tables_;
  int parity_;
  std::vector<std::vector<std::int64_t>> binom_;
  std::vector<mpz_class> weights_;
  std::unordered_map<std::string, mpz_class> memo_;
};

mpz_class labelled_det_coeff(const GroupSpec& spec, std::span<const int> sequence);
mpz_class det_coeff(const GroupSpec& spec, const Monomial& m);

std::int64_t count_P(const GroupSpec& spec);
std::int64_t count_D(const GroupSpec& spec);

struct NearHookCoefficients {
  mpz_class hook;    // [m] imm_{(n-1,1)}
  mpz_class cohook;  // [m] imm_{(2,1^{n-2})}
};

// sum_a r(a) lambda_a - n, the numerator of the master-formula scalar.
std::int64_t near_hook_numerator(const GroupSpec& spec, const Monomial& m);

NearHookCoefficients near_hook_coeff(const GroupSpec& spec, const Monomial& m, const PermClassStats& stats);

enum class NearHookPath {
  automatic,    // enumerate for n < kEnumerationLimit, formula otherwise
  enumerate,    // p_m, d_m from perm_class_stats
  formula,      // p_m > 0 iff m is zero-sum; d_m from det_coeff
};

struct NearHookCounts {
  std::int64_t hook = 0;
  std::int64_t cohook = 0;
};

NearHookCounts count_I_nearhook(const GroupSpec& spec, NearHookPath path = NearHookPath::automatic);

// v_p(m!) by Legendre's formula.
int legendre(std::int64_t m, int p);

struct ValuationProfile {
  struct Term {
    std::vector<int> block_sizes;  // weakly decreasing
    std::int64_t multiplicity = 0;  // partitions in Pi_0(S) with this shape
    int valuation = 0;
  };
  int p = 0;
  int r = 0;
  std::vector<Term> terms;  // sorted by shape
  int one_block_valuation = 0;
  int min_valuation = 0;
  bool strictly_minimal = false;
};

ValuationProfile padic_profile(const GroupSpec& spec, std::span<const int> sequence);

}  // namespace cayley
