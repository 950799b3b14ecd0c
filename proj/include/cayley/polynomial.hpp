#pragma once

/*
 * Sparse polynomials in the variables x_g (g in G) with big-integer
 * coefficients. Exponent vectors are indexed by GroupSpec::elements() order.
 * Terms are kept in a std::map, so iteration order is lexicographic on
 * exponent vectors and doubles as the canonical serialization order.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  std::string to_string() const;  // "x0^3", "x0*x1*x2", "1"
  auto operator<=>(const Monomial&) const = default;
};

// Exact assignment g -> x_g in elements() order.
struct RationalSpecialization {
  std::vector<mpq_class> values;
  std::uint64_t seed = 0;
};

class GroupPolynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  explicit GroupPolynomial(GroupSpec spec) : spec_(std::move(spec)) {}

  const GroupSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c to the coefficient of m, dropping the term if it cancels.
  void add_term(const Monomial& m, const mpz_class& c);
  mpz_class coefficient(const Monomial& m) const;
  std::set<Monomial> support() const;

  mpq_class evaluate(const RationalSpecialization& rho) const;

  bool operator==(const GroupPolynomial& other) const {
    return spec_ == other.spec_ && terms_ == other.terms_;
  }

 private:
  GroupSpec spec_;
  TermMap terms_;
};

// P + c*Q; throws std::invalid_argument on mixed group specs.
GroupPolynomial add_scaled(const GroupPolynomial& p, const GroupPolynomial& q, const mpz_class& c);

// x_{a + sigma(a)} product; sigma is an image vector over element indices.
Monomial monomial_of_perm(const GroupSpec& spec, std::span<const int> sigma);

// {"group": "c3", "terms": [{"exp": [...], "coeff": "-1"}, ...]}
std::string to_json(const GroupPolynomial& p, int indent = -1);
GroupPolynomial polynomial_from_json(const std::string& text);

}  // namespace cayley
