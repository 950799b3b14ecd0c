#include "cayley/polynomial.hpp"

#include <json.hpp>
#include <numeric>
#include <stdexcept>

namespace cayley {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exponents[i] > 1) out += '^' + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

void GroupPolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (m.exponents.size() != static_cast<std::size_t>(spec_.order()))
    throw std::invalid_argument("monomial length does not match group order");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class GroupPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::set<Monomial> GroupPolynomial::support() const {
  std::set<Monomial> out;
  for (const auto& [m, c] : terms_) out.insert(out.end(), m);
  return out;
}

mpq_class GroupPolynomial::evaluate(const RationalSpecialization& rho) const {
  if (rho.values.size() != static_cast<std::size_t>(spec_.order()))
    throw std::invalid_argument("specialization must assign every group element");
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class term = c;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      for (int e = 0; e < m.exponents[i]; ++e) term *= rho.values[i];
    total += term;
  }
  return total;
}

GroupPolynomial add_scaled(const GroupPolynomial& p, const GroupPolynomial& q, const mpz_class& c) {
  if (!(p.spec() == q.spec())) throw std::invalid_argument("polynomials over different groups");
  GroupPolynomial out = p;
  for (const auto& [m, coeff] : q.terms()) out.add_term(m, c * coeff);
  return out;
}

Monomial monomial_of_perm(const GroupSpec& spec, std::span<const int> sigma) {
  const int n = spec.order();
  if (sigma.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("permutation has wrong length");
  GroupTables tables(spec);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int a = 0; a < n; ++a) {
    int b = sigma[static_cast<std::size_t>(a)];
    if (b < 0 || b >= n || hit[static_cast<std::size_t>(b)]) throw std::invalid_argument("not a bijection on G");
    hit[static_cast<std::size_t>(b)] = 1;
    ++m.exponents[static_cast<std::size_t>(tables.add(a, b))];
  }
  return m;
}

std::string to_json(const GroupPolynomial& p, int indent) {
  nlohmann::ordered_json doc;
  doc["group"] = p.spec().to_string();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = m.exponents;
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(indent);
}

GroupPolynomial polynomial_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  GroupPolynomial p(GroupSpec::parse(doc.at("group").get<std::string>()));
  const auto n = static_cast<std::size_t>(p.spec().order());
  for (const auto& t : doc.at("terms")) {
    Monomial m{t.at("exp").get<std::vector<int>>()};
    if (m.exponents.size() != n) throw std::invalid_argument("term exponent vector has wrong length");
    for (int e : m.exponents)
      if (e < 0) throw std::invalid_argument("negative exponent");
    mpz_class c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient string");
    p.add_term(m, c);
  }
  return p;
}

}  // namespace cayley
