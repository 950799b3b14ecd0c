#pragma once

/*
 * Immanants of the Cayley matrix M_G = (x_{a+b}).
 *
 * Full immanants come from one sweep over S(G) that tallies, for every
 * (monomial, cycle type) pair, how many permutations produce it. Any class
 * function then yields its polynomial as a weighted sum of that tally, so a
 * single sweep serves every partition of n at once.
 *
 * Orbit mode walks S(G) orbit by orbit under conjugation by translations,
 * sigma -> t_g sigma t_g^{-1}. Cycle types are constant on orbits and the
 * monomial of each image is the representative's shifted by 2g. The related
 * action (g * sigma)(u) = sigma(u - g) - g fixes sign and monomial but not
 * the cycle type (on C3 it sends the identity to a 3-cycle), so it is only
 * offered as translate_conjugate for the counting arguments.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cayley/characters.hpp"
#include "cayley/group.hpp"
#include "cayley/polynomial.hpp"

namespace cayley {

// Full S(G) enumeration is refused above this order.
inline constexpr int kEnumerationLimit = 10;

class EnvelopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepMode { bruteforce, orbit };

using ClassFunction = std::function<std::int64_t(const CycleType&)>;

// Tally of permutations by (monomial, cycle type).
class ClassTally {
 public:
  struct Entry {
    Monomial monomial;
    std::size_t cycle_type;  // index into cycle_types()
    std::int64_t count;
  };

  ClassTally(GroupSpec spec, std::vector<CycleType> types, std::vector<Entry> entries)
      : spec_(std::move(spec)), types_(std::move(types)), entries_(std::move(entries)) {}

  const GroupSpec& spec() const { return spec_; }
  const std::vector<CycleType>& cycle_types() const { return types_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // sum over sigma of f(type sigma) * prod x_{a + sigma(a)}
  GroupPolynomial apply(const ClassFunction& f) const;

 private:
  GroupSpec spec_;
  std::vector<CycleType> types_;
  std::vector<Entry> entries_;
};

ClassTally sweep(const GroupSpec& spec, SweepMode mode = SweepMode::bruteforce);

GroupPolynomial immanant(const GroupSpec& spec, const Partition& lambda, SweepMode mode = SweepMode::bruteforce);
GroupPolynomial determinant(const GroupSpec& spec);
GroupPolynomial permanent(const GroupSpec& spec);

// imm_{(4,1^{n-4})} - imm_{(2,2,2,1^{n-6})} weighted by the closed-form
// character difference; n >= 6.
GroupPolynomial twin_difference(const GroupSpec& spec);

struct PermClassStats {
  std::int64_t p_m = 0;             // |P(m)|
  std::int64_t d_m = 0;             // sum of signs over P(m)
  std::int64_t fix_sum = 0;         // sum of Fix(sigma)
  std::int64_t signed_fix_sum = 0;  // sum of sgn(sigma) Fix(sigma)
  std::vector<std::int64_t> per_a_counts;  // |{sigma in P(m) : sigma(0) = a}|
  std::vector<std::int64_t> per_a_signed;  // signed version of the above
};

// Enumerates exactly the permutations producing m by capacity-constrained
// backtracking.
PermClassStats perm_class_stats(const GroupSpec& spec, const Monomial& m);

// (g * sigma)(u) = sigma(u - g) - g on element indices.
std::vector<int> translate_conjugate(const GroupTables& tables, int g, std::span<const int> sigma);
// (t_g sigma t_g^{-1})(u) = sigma(u - g) + g
std::vector<int> conjugate_by_translation(const GroupTables& tables, int g, std::span<const int> sigma);

// Worker count from IMM_THREADS (unset or 0: hardware concurrency).
unsigned worker_count();

}  // namespace cayley
