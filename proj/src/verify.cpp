#include "cayley/verify.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "cayley/immanant.hpp"
#include "cayley/minors.hpp"
#include "cayley/support.hpp"

namespace cayley {

namespace {

struct Outcome {
  VerifyStatus status;
  std::string witness;
};

Outcome pass() { return {VerifyStatus::pass, {}}; }
Outcome fail(std::string w) { return {VerifyStatus::fail, std::move(w)}; }
Outcome skip(std::string why) { return {VerifyStatus::skipped, std::move(why)}; }

bool is_cyclic(const GroupSpec& spec) { return spec.canonical_factors().size() == 1; }

Monomial power_of_zero(int n) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
  m.exponents[0] = n;
  return m;
}

Outcome check_hall(const GroupSpec& spec) {
  if (spec.order() > kEnumerationLimit) return skip("order above enumeration envelope");
  auto hall = hall_support(spec);
  auto per = permanent(spec).support();
  std::set<Monomial> expected(hall.begin(), hall.end());
  if (per == expected) return pass();
  for (const auto& m : expected)
    if (!per.contains(m)) return fail("zero-sum " + m.to_string() + " missing from permanent");
  for (const auto& m : per)
    if (!expected.contains(m)) return fail("permanent term " + m.to_string() + " is not zero-sum");
  return fail("support mismatch");
}

Outcome check_thm13(const GroupSpec& spec) {
  if (!is_prime_power(spec.order())) return skip("order is not a prime power");
  const auto p = count_P(spec);
  const auto d = count_D(spec);
  if (p != d) return fail("P=" + std::to_string(p) + " D=" + std::to_string(d));
  if (spec.order() <= 8) {
    const auto brute = static_cast<std::int64_t>(determinant(spec).support_size());
    if (brute != d) return fail("formula D=" + std::to_string(d) + " but brute-force D=" + std::to_string(brute));
  }
  return pass();
}

Outcome check_thm14(const GroupSpec& spec) {
  const int n = spec.order();
  if (n % 2 == 1) {
    for (const auto& m : hall_support(spec))
      if (near_hook_numerator(spec, m) != 0) return fail("nonzero scalar at " + m.to_string());
    if (n <= kEnumerationLimit) {
      auto tally = sweep(spec);
      auto hook = tally.apply(hook_char_n11);
      auto cohook = tally.apply(cohook_char);
      if (!hook.is_zero()) return fail("imm_(n-1,1) has " + std::to_string(hook.support_size()) + " terms");
      if (!cohook.is_zero()) return fail("imm_(2,1^(n-2)) has " + std::to_string(cohook.support_size()) + " terms");
    }
    return pass();
  }
  if (n % 4 == 2) {
    const auto counts = count_I_nearhook(spec);
    const auto p = count_P(spec);
    const auto d = count_D(spec);
    if (counts.hook != p) return fail("I_hook=" + std::to_string(counts.hook) + " P=" + std::to_string(p));
    if (counts.cohook != d) return fail("I_cohook=" + std::to_string(counts.cohook) + " D=" + std::to_string(d));
    return pass();
  }
  return skip("order divisible by 4");
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"hall", "thm13", "thm14", "thm15", "prop42", "jacobi", "scalars"};
  return names;
}

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::skipped: return "skipped";
  }
  return "unknown";
}

const GroupPolynomial& Verifier::twin(const GroupSpec& spec) {
  auto key = spec.to_string();
  auto it = twin_cache_.find(key);
  if (it == twin_cache_.end()) it = twin_cache_.emplace(key, twin_difference(spec)).first;
  return it->second;
}

std::vector<VerifyReport> Verifier::run(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify_suites();
  } else if (std::find(verify_suites().begin(), verify_suites().end(), suite) != verify_suites().end()) {
    suites = {suite};
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<VerifyReport> out;
  for (const auto& s : suites)
    for (const auto& g : options_.groups) out.push_back(run_one(s, g));
  return out;
}

VerifyReport Verifier::run_one(const std::string& suite, const GroupSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const int n = spec.order();
  VerifyReport report{suite, spec.to_string(), "", VerifyStatus::skipped, "", 0};
  Outcome outcome = skip("not applicable");

  auto seeded = [&](auto&& body) -> Outcome {
    report.parameters = "seed=" + std::to_string(options_.seed) + " seeds=" + std::to_string(options_.seeds) +
                        " range=" + std::to_string(options_.range);
    for (int k = 0; k < options_.seeds; ++k) {
      auto rho = random_specialization(spec, options_.seed + static_cast<std::uint64_t>(k), options_.range);
      for (const CheckReport& r : body(rho))
        if (!r.passed()) return fail(r.name + ": " + r.violations.front());
    }
    return pass();
  };

  if (suite == "hall") {
    outcome = check_hall(spec);
  } else if (suite == "thm13") {
    outcome = check_thm13(spec);
  } else if (suite == "thm14") {
    outcome = check_thm14(spec);
  } else if (suite == "thm15") {
    if (n % 2 == 0 || n < 7) {
      outcome = skip("needs odd order >= 7");
    } else if (n > kEnumerationLimit) {
      outcome = skip("order above enumeration envelope");
    } else {
      const auto& diff = twin(spec);
      outcome = diff.is_zero() ? pass() : fail(std::to_string(diff.support_size()) + " nonzero terms, first " +
                                               diff.terms().begin()->first.to_string());
    }
  } else if (suite == "prop42") {
    if (!is_cyclic(spec) || n % 2 == 1 || n < 6) {
      outcome = skip("needs cyclic group of even order >= 6");
    } else if (n > kEnumerationLimit) {
      outcome = skip("order above enumeration envelope");
    } else {
      const mpz_class got = twin(spec).coefficient(power_of_zero(n));
      const long expected = (3 - n) * (((n - 2) / 2) % 2 ? -1 : 1);
      report.parameters = "expected=" + std::to_string(expected);
      outcome = got == expected ? pass() : fail("coefficient of x0^n is " + got.get_str());
    }
  } else if (suite == "jacobi") {
    outcome = seeded([&](const RationalSpecialization& rho) {
      auto inv = inverse_profile(spec, rho);
      return std::vector<CheckReport>{convolution_check(spec, rho, inv), hankel_inverse_check(spec, rho, inv),
                                      jacobi_check(spec, rho)};
    });
  } else if (suite == "scalars") {
    const bool odd = n % 2 == 1;
    const bool reduction = n >= 6 && n <= kEnumerationLimit;
    if (!odd && !reduction) {
      outcome = skip("needs odd order or 6 <= order <= " + std::to_string(kEnumerationLimit));
    } else {
      outcome = seeded([&](const RationalSpecialization& rho) {
        std::vector<CheckReport> checks;
        if (odd) {
          CheckReport sums{"odd_order_minor_sums", 0, {}};
          const QMatrix m = cayley_matrix(spec, rho);
          sums.expect_equal(f1(m), bareiss_determinant(m), "F1 = det");
          sums.expect_equal(t12(m), t2(m), "T12 = T2");
          checks.push_back(std::move(sums));
          checks.push_back(proof_scalar_check(spec, proof_scalars(spec, rho)));
        }
        if (reduction) checks.push_back(reduction_check(spec, rho, twin(spec)));
        return checks;
      });
    }
  }

  report.status = outcome.status;
  report.witness = std::move(outcome.witness);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string reports_to_json(const std::vector<VerifyReport>& reports, bool include_timing) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["group"] = r.group;
    j["parameters"] = r.parameters;
    j["status"] = to_string(r.status);
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (include_timing) j["wall_ms"] = r.wall_ms;
    doc.push_back(std::move(j));
  }
  return doc.dump(2);
}

}  // namespace cayley
