#pragma once

// Theorem-verification suites behind `cayley verify`.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/polynomial.hpp"

namespace cayley {

enum class VerifyStatus { pass, fail, skipped };

struct VerifyReport {
  std::string theorem;
  std::string group;
  std::string parameters;
  VerifyStatus status = VerifyStatus::skipped;
  std::string witness;  // first counterexample, or the reason for a skip
  double wall_ms = 0;
};

struct VerifyOptions {
  std::vector<GroupSpec> groups;
  std::uint64_t seed = 1;
  int seeds = 5;
  int range = 32;
};

// hall, thm13, thm14, thm15, prop42, jacobi, scalars
const std::vector<std::string>& verify_suites();

class Verifier {
 public:
  explicit Verifier(VerifyOptions options) : options_(std::move(options)) {}

  // "all" runs every suite; throws std::invalid_argument for unknown names.
  std::vector<VerifyReport> run(const std::string& suite);

 private:
  VerifyReport run_one(const std::string& suite, const GroupSpec& spec);
  const GroupPolynomial& twin(const GroupSpec& spec);

  VerifyOptions options_;
  std::map<std::string, GroupPolynomial> twin_cache_;
};

std::string to_string(VerifyStatus status);
// Machine-readable report list; wall times only when include_timing.
std::string reports_to_json(const std::vector<VerifyReport>& reports, bool include_timing);

}  // namespace cayley
