// cayley: immanants of Cayley-table matrices of finite abelian groups.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or parse error, 3 enumeration
// envelope exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/characters.hpp"
#include "cayley/group.hpp"
#include "cayley/immanant.hpp"
#include "cayley/minors.hpp"
#include "cayley/polynomial.hpp"
#include "cayley/support.hpp"
#include "cayley/verify.hpp"

using namespace cayley;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvelope = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

GroupSpec parse_group(const std::string& text) {
  try {
    return GroupSpec::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

Partition parse_partition(const std::string& text, int n) {
  auto parts = parse_ints(text, "partition");
  for (int p : parts)
    if (p < 1) throw UsageError("partition parts must be positive");
  Partition lambda(parts);
  if (lambda.weight() != n)
    throw UsageError("partition " + lambda.to_string() + " does not have weight |G| = " + std::to_string(n));
  return lambda;
}

SweepMode parse_mode(const std::string& text) {
  if (text == "bruteforce") return SweepMode::bruteforce;
  if (text == "orbit") return SweepMode::orbit;
  throw UsageError("mode must be bruteforce or orbit");
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << doc.dump(2) << '\n';
}

std::vector<GroupSpec> groups_from(const std::string& list, int max_order) {
  std::vector<GroupSpec> out;
  if (!list.empty()) {
    for (const auto& g : split(list, ',')) out.push_back(parse_group(g));
    return out;
  }
  for (int n = 2; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

int cmd_imm(const std::string& group, const std::string& partition, const std::string& mode, const std::string& out) {
  const auto spec = parse_group(group);
  const auto lambda = parse_partition(partition, spec.order());
  const auto poly = immanant(spec, lambda, parse_mode(mode));
  json summary;
  summary["group"] = spec.to_string();
  summary["partition"] = lambda.parts();
  summary["mode"] = mode;
  summary["support_size"] = poly.support_size();
  if (out.empty()) {
    summary["polynomial"] = json::parse(to_json(poly));
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << to_json(poly, 2) << '\n';
    summary["out"] = out;
  }
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_twin(const std::string& group) {
  const auto spec = parse_group(group);
  const auto diff = twin_difference(spec);
  Monomial x0n{std::vector<int>(static_cast<std::size_t>(spec.order()), 0)};
  x0n.exponents[0] = spec.order();
  json doc;
  doc["group"] = spec.to_string();
  doc["support_size"] = diff.support_size();
  doc["x0n_coefficient"] = diff.coefficient(x0n).get_str();
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_support(const std::string& group, const std::string& report, const std::string& out) {
  if (report != "counts" && report != "full") throw UsageError("report must be counts or full");
  const auto spec = parse_group(group);
  ZeroSumCoefficients coeffs(spec);
  const auto hall = hall_support(spec);
  std::int64_t d = 0;
  json monomials = json::array();
  for (const auto& m : hall) {
    const auto c = coeffs.det_coeff(m);
    d += c != 0;
    if (report == "full") {
      json row;
      row["exp"] = m.exponents;
      row["det_coeff"] = c.get_str();
      row["hook_numerator"] = near_hook_numerator(spec, m);
      monomials.push_back(std::move(row));
    }
  }
  const auto near = count_I_nearhook(spec);
  json doc;
  doc["group"] = spec.to_string();
  doc["P"] = hall.size();
  doc["D"] = d;
  doc["I_hook"] = near.hook;
  doc["I_cohook"] = near.cohook;
  if (report == "full") doc["monomials"] = std::move(monomials);
  emit(doc, out);
  return kExitOk;
}

int cmd_padic(const std::string& group, bool all, const std::string& sequence, const std::string& out) {
  const auto spec = parse_group(group);
  if (!is_prime_power(spec.order())) throw UsageError("padic needs a group of prime-power order");
  std::vector<std::vector<int>> sequences;
  if (all) {
    for (const auto& m : hall_support(spec)) sequences.push_back(labelling(m));
  } else if (!sequence.empty()) {
    auto seq = parse_ints(sequence, "sequence");
    if (seq.size() != static_cast<std::size_t>(spec.order())) throw UsageError("sequence length must equal |G|");
    for (int g : seq)
      if (g < 0 || g >= spec.order()) throw UsageError("sequence entries are element indices in [0, |G|)");
    sequences.push_back(std::move(seq));
  } else {
    throw UsageError("padic needs --all or --sequence");
  }
  std::ostringstream csv;
  csv << "sequence,min_valuation,strictly_minimal\n";
  bool ok = true;
  for (const auto& seq : sequences) {
    const auto profile = padic_profile(spec, seq);
    std::string label;
    for (std::size_t i = 0; i < seq.size(); ++i) label += (i ? " " : "") + std::to_string(seq[i]);
    csv << label << ',' << profile.min_valuation << ',' << (profile.strictly_minimal ? "true" : "false") << '\n';
    ok = ok && profile.strictly_minimal;
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out);
    f << csv.str();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_minors(const std::string& group, int seeds, std::uint64_t seed, int range, const std::string& checks,
               const std::string& out) {
  const auto spec = parse_group(group);
  if (range < 2) throw UsageError("--range must be >= 2");
  const std::vector<std::string> known{"conv", "hankel", "jacobi", "f1", "t2t12", "scalars", "reduction"};
  auto wanted = split(checks, ',');
  for (const auto& c : wanted)
    if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
  const int n = spec.order();
  std::optional<GroupPolynomial> twin;
  json doc;
  bool all_pass = true;
  for (const auto& check : wanted) {
    json entry;
    CheckReport merged{check, 0, {}};
    std::string skipped;
    if ((check == "f1" || check == "t2t12" || check == "scalars") && n % 2 == 0) skipped = "needs odd order";
    if (check == "reduction" && n < 6) skipped = "needs order >= 6";
    if (skipped.empty()) {
      if (check == "reduction" && !twin) twin = twin_difference(spec);
      for (int k = 0; k < seeds; ++k) {
        const auto rho = random_specialization(spec, seed + static_cast<std::uint64_t>(k), range);
        CheckReport r{check, 0, {}};
        if (check == "conv") {
          r = convolution_check(spec, rho, inverse_profile(spec, rho));
        } else if (check == "hankel") {
          r = hankel_inverse_check(spec, rho, inverse_profile(spec, rho));
        } else if (check == "jacobi") {
          r = jacobi_check(spec, rho);
        } else if (check == "f1") {
          const auto m = cayley_matrix(spec, rho);
          r.expect_equal(f1(m), bareiss_determinant(m), spec.to_string() + " seed " + std::to_string(rho.seed) + " F1 = det");
        } else if (check == "t2t12") {
          const auto m = cayley_matrix(spec, rho);
          r.expect_equal(t12(m), t2(m), spec.to_string() + " seed " + std::to_string(rho.seed) + " T12 = T2");
        } else if (check == "scalars") {
          r = proof_scalar_check(spec, proof_scalars(spec, rho));
        } else {
          r = reduction_check(spec, rho, twin);
        }
        merged.evaluated += r.evaluated;
        merged.violations.insert(merged.violations.end(), r.violations.begin(), r.violations.end());
      }
      entry["status"] = merged.passed() ? "pass" : "fail";
      entry["evaluated"] = merged.evaluated;
      if (!merged.passed()) entry["counterexample"] = merged.violations.front();
      all_pass = all_pass && merged.passed();
    } else {
      entry["status"] = "skipped";
      entry["reason"] = skipped;
    }
    doc[check] = std::move(entry);
  }
  emit(doc, out);
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& suite, const std::string& groups, int max_order, std::uint64_t seed, int seeds,
               int range, bool timing, const std::string& out) {
  VerifyOptions options;
  options.groups = groups_from(groups, max_order);
  options.seed = seed;
  options.seeds = seeds;
  options.range = range;
  for (const auto& g : options.groups)
    if (g.order() > max_order && groups.empty()) throw UsageError("group order above --max-order");
  if (suite != "all" && std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end())
    throw UsageError("unknown suite '" + suite + "'");
  Verifier verifier(options);
  const auto reports = verifier.run(suite);
  const auto text = reports_to_json(reports, timing);
  if (out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream(out) << text << '\n';
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.status != VerifyStatus::fail;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_explore(int conjecture, int n, const std::string& out) {
  if (conjecture != 3) throw UsageError("only --conjecture 3 is available");
  if (n < 4) throw UsageError("--n must be >= 4 for the shape (n-2,1,1)");
  const GroupSpec spec({n});
  const auto lambda = Partition({n - 2, 1, 1});
  const auto imm = immanant(spec, lambda);
  json doc;
  doc["group"] = spec.to_string();
  doc["partition"] = lambda.parts();
  doc["I"] = imm.support_size();
  doc["P"] = count_P(spec);
  doc["D"] = count_D(spec);
  emit(doc, out);
  return kExitOk;
}

int cmd_search_gap(int max_order, const std::string& out) {
  if (max_order < 2) throw UsageError("--max-order must be >= 2");
  json rows = json::array();
  for (int n = 2; n <= max_order; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      json row;
      const auto p = count_P(g);
      const auto d = count_D(g);
      row["group"] = g.to_string();
      row["order"] = n;
      row["prime_power"] = is_prime_power(n);
      row["P"] = p;
      row["D"] = d;
      row["gap"] = d < p;
      rows.push_back(std::move(row));
    }
  emit(rows, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immanants of Cayley-table matrices of finite abelian groups"};
  app.require_subcommand(1);

  std::string group, partition, mode = "bruteforce", out, report = "counts", sequence, checks, suite = "all", groups;
  int seeds = 5, range = 32, max_order = 9, conjecture = 3, explore_n = 7;
  std::uint64_t seed = 1;
  bool all = false, timing = false;

  auto* imm = app.add_subcommand("imm", "Compute imm_lambda(M_G) as a polynomial");
  imm->add_option("--group", group, "Group, e.g. c3, c2xc4")->required();
  imm->add_option("--partition", partition, "Partition of |G|, e.g. 4,1,1,1")->required();
  imm->add_option("--mode", mode, "bruteforce or orbit");
  imm->add_option("--out", out, "Write the polynomial JSON here");

  auto* twin = app.add_subcommand("twin", "Support of imm_(4,1^(n-4)) - imm_(2,2,2,1^(n-6))");
  twin->add_option("--group", group)->required();

  auto* support = app.add_subcommand("support", "P(G), D(G) and near-hook support counts");
  support->add_option("--group", group)->required();
  support->add_option("--report", report, "counts or full");
  support->add_option("--out", out);

  auto* padic = app.add_subcommand("padic", "p-adic valuation profiles of zero-sum sequences (CSV)");
  padic->add_option("--group", group)->required();
  padic->add_flag("--all", all, "Every zero-sum multiset");
  padic->add_option("--sequence", sequence, "Element indices, e.g. 0,1,2");
  padic->add_option("--out", out);

  auto* minors = app.add_subcommand("minors", "Exact principal-minor identity checks");
  minors->add_option("--group", group)->required();
  minors->add_option("--seeds", seeds);
  minors->add_option("--seed", seed);
  minors->add_option("--range", range);
  minors->add_option("--checks", checks)->default_val("conv,hankel,jacobi,f1,t2t12,scalars,reduction");
  minors->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Run theorem-verification suites");
  verify->add_option("--suite", suite, "hall, thm13, thm14, thm15, prop42, jacobi, scalars, all");
  verify->add_option("--groups", groups, "Comma list; default: every abelian group up to --max-order");
  verify->add_option("--max-order", max_order);
  verify->add_option("--seed", seed);
  verify->add_option("--seeds", seeds);
  verify->add_option("--range", range);
  verify->add_flag("--timing", timing, "Include wall times (breaks byte-identical output)");
  verify->add_option("--out", out);

  auto* explore = app.add_subcommand("explore", "Report-only numerical explorations");
  explore->add_option("--conjecture", conjecture);
  explore->add_option("--n", explore_n);
  explore->add_option("--out", out);

  auto* gap = app.add_subcommand("search-pd-gap", "Report groups with D(G) < P(G)");
  gap->add_option("--max-order", max_order)->required();
  gap->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*imm) return cmd_imm(group, partition, mode, out);
    if (*twin) return cmd_twin(group);
    if (*support) return cmd_support(group, report, out);
    if (*padic) return cmd_padic(group, all, sequence, out);
    if (*minors) return cmd_minors(group, seeds, seed, range, checks, out);
    if (*verify) return cmd_verify(suite, groups, max_order, seed, seeds, range, timing, out);
    if (*explore) return cmd_explore(conjecture, explore_n, out);
    if (*gap) return cmd_search_gap(max_order, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnvelopeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnvelope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
