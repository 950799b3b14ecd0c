#pragma once

/*
 * Exact-rational checks of the principal-minor apparatus for M_G.
 *
 * Everything is evaluated at integer specializations x_g -> rho(g); the
 * inverse of M_G is again group-Hankel, (y_{a+b}), with y solving the
 * convolution system sum_r x_r y_{r+s} = [s = 0]. Checks return reports
 * listing every violation rather than throwing, except where a theorem's
 * hypothesis is not met.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/exact_linalg.hpp"
#include "cayley/group.hpp"
#include "cayley/polynomial.hpp"

namespace cayley {

inline constexpr int kDefaultSpecializationRetries = 16;

// Integer values uniform in [1, range] from a seeded mt19937_64, resampled
// until det M_G != 0.
RationalSpecialization random_specialization(const GroupSpec& spec, std::uint64_t seed, int range,
                                             int retries = kDefaultSpecializationRetries);

// Validates an explicit assignment; throws SingularMatrixError if det M_G = 0.
RationalSpecialization make_specialization(const GroupSpec& spec, std::vector<mpq_class> values);

QMatrix cayley_matrix(const GroupSpec& spec, const RationalSpecialization& rho);

struct InverseProfile {
  std::vector<mpq_class> y;
  mpq_class delta;
};

// Solves the convolution system by fraction-free elimination.
InverseProfile inverse_profile(const GroupSpec& spec, const RationalSpecialization& rho);

struct CheckReport {
  std::string name;
  std::int64_t evaluated = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  void expect_equal(const mpq_class& lhs, const mpq_class& rhs, const std::string& what);
};

// sum_r x_r y_{r+s} = [s = 0] for every s.
CheckReport convolution_check(const GroupSpec& spec, const RationalSpecialization& rho, const InverseProfile& inv);
// (y_{a+b}) equals the Gauss-Jordan inverse of M_G entrywise.
CheckReport hankel_inverse_check(const GroupSpec& spec, const RationalSpecialization& rho, const InverseProfile& inv);

mpq_class gamma(const GroupTables& tables, const std::vector<mpq_class>& y, int i, int j, int k);

// All 1-, 2- and 3-element principal minors against Delta times the
// expressions in y.
CheckReport jacobi_check(const GroupSpec& spec, const RationalSpecialization& rho);

// Matrix-general principal-minor sums.
mpq_class f1(const QMatrix& a);
mpq_class t2(const QMatrix& a);
mpq_class t12(const QMatrix& a);

mpq_class F1(const GroupSpec& spec, const RationalSpecialization& rho);
mpq_class T2(const GroupSpec& spec, const RationalSpecialization& rho);
mpq_class T12(const GroupSpec& spec, const RationalSpecialization& rho);

struct ProofScalars {
  mpq_class C, S, B1, B2, B3, B4, B5;
  // sum_{i,j} x_{i+j}^2 (y_{2i} y_{2j} - y_{i+j}^2)
  mpq_class t2_double_sum;
  mpq_class two_t2_over_delta;   // computed from the principal minors
  mpq_class two_t12_over_delta;  // computed from the principal minors
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws PreconditionError for even |G|.
ProofScalars proof_scalars(const GroupSpec& spec, const RationalSpecialization& rho);
// Checks in order: 2T2/D = double sum = C - nS, B1 = C, B2 = S, B3 = nS, B4 = S,
// B5 = S, 2T12/D = C - nS, and B1 + 2B2 - B3 - B4 - B5 = 2T12/D.
CheckReport proof_scalar_check(const GroupSpec& spec, const ProofScalars& scalars);

// imm_{(4,1^{n-4})} - imm_{(2,2,2,1^{n-6})} at rho against
// F1 - det + 2(T12 - T2). Pass the precomputed twin difference to avoid a
// fresh S(G) sweep.
CheckReport reduction_check(const GroupSpec& spec, const RationalSpecialization& rho,
                            const std::optional<GroupPolynomial>& twin = std::nullopt);

}  // namespace cayley
