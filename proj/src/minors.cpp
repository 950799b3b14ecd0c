#include "cayley/minors.hpp"

#include <array>
#include <random>

#include "cayley/immanant.hpp"

namespace cayley {

namespace {

std::string group_label(const GroupSpec& spec, const RationalSpecialization& rho) {
  return spec.to_string() + " seed " + std::to_string(rho.seed);
}

std::string show(const mpq_class& q) { return q.get_str(); }

}  // namespace

RationalSpecialization random_specialization(const GroupSpec& spec, std::uint64_t seed, int range, int retries) {
  if (range < 2) throw std::invalid_argument("specialization range must be >= 2");
  std::mt19937_64 gen(seed);
  const auto span = static_cast<std::uint64_t>(range);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    RationalSpecialization rho;
    rho.seed = seed;
    // Plain modular reduction keeps the stream identical across standard libraries.
    for (int g = 0; g < spec.order(); ++g) rho.values.emplace_back(static_cast<long>(1 + gen() % span));
    if (sgn(bareiss_determinant(cayley_matrix(spec, rho))) != 0) return rho;
  }
  throw SingularMatrixError("no nonsingular specialization for " + spec.to_string() + " after " +
                            std::to_string(retries) + " retries");
}

RationalSpecialization make_specialization(const GroupSpec& spec, std::vector<mpq_class> values) {
  if (values.size() != static_cast<std::size_t>(spec.order()))
    throw std::invalid_argument("specialization must assign every group element");
  RationalSpecialization rho{std::move(values), 0};
  if (sgn(bareiss_determinant(cayley_matrix(spec, rho))) == 0)
    throw SingularMatrixError("specialized Cayley matrix is singular");
  return rho;
}

QMatrix cayley_matrix(const GroupSpec& spec, const RationalSpecialization& rho) {
  const int n = spec.order();
  if (rho.values.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("specialization size mismatch");
  GroupTables tables(spec);
  QMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = rho.values[static_cast<std::size_t>(tables.add(a, b))];
  return m;
}

InverseProfile inverse_profile(const GroupSpec& spec, const RationalSpecialization& rho) {
  const int n = spec.order();
  GroupTables tables(spec);
  // Row s, column t: coefficient of y_t in sum_r x_r y_{r+s} is x_{t-s}.
  QMatrix system(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) system(s, t) = rho.values[static_cast<std::size_t>(tables.sub(t, s))];
  std::vector<mpq_class> rhs(static_cast<std::size_t>(n), 0);
  rhs[0] = 1;
  InverseProfile out;
  out.y = bareiss_solve(std::move(system), std::move(rhs));
  out.delta = bareiss_determinant(cayley_matrix(spec, rho));
  return out;
}

void CheckReport::expect_equal(const mpq_class& lhs, const mpq_class& rhs, const std::string& what) {
  ++evaluated;
  if (lhs != rhs) violations.push_back(what + ": " + show(lhs) + " != " + show(rhs));
}

CheckReport convolution_check(const GroupSpec& spec, const RationalSpecialization& rho, const InverseProfile& inv) {
  CheckReport report{"conv", 0, {}};
  GroupTables tables(spec);
  const int n = spec.order();
  for (int s = 0; s < n; ++s) {
    mpq_class acc = 0;
    for (int r = 0; r < n; ++r)
      acc += rho.values[static_cast<std::size_t>(r)] * inv.y[static_cast<std::size_t>(tables.add(r, s))];
    report.expect_equal(acc, s == 0 ? 1 : 0, group_label(spec, rho) + " s=" + std::to_string(s));
  }
  return report;
}

CheckReport hankel_inverse_check(const GroupSpec& spec, const RationalSpecialization& rho, const InverseProfile& inv) {
  CheckReport report{"hankel", 0, {}};
  GroupTables tables(spec);
  const int n = spec.order();
  const QMatrix direct = gauss_jordan_inverse(cayley_matrix(spec, rho));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      report.expect_equal(direct(a, b), inv.y[static_cast<std::size_t>(tables.add(a, b))],
                          group_label(spec, rho) + " inverse entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return report;
}

mpq_class gamma(const GroupTables& tables, const std::vector<mpq_class>& y, int i, int j, int k) {
  auto Y = [&](int g) -> const mpq_class& { return y[static_cast<std::size_t>(g)]; };
  const mpq_class& yii = Y(tables.twice(i));
  const mpq_class& yjj = Y(tables.twice(j));
  const mpq_class& ykk = Y(tables.twice(k));
  const mpq_class& yij = Y(tables.add(i, j));
  const mpq_class& yik = Y(tables.add(i, k));
  const mpq_class& yjk = Y(tables.add(j, k));
  return yii * yjj * ykk + 2 * yij * yik * yjk - yii * yjk * yjk - yjj * yik * yik - ykk * yij * yij;
}

CheckReport jacobi_check(const GroupSpec& spec, const RationalSpecialization& rho) {
  CheckReport report{"jacobi", 0, {}};
  GroupTables tables(spec);
  const int n = spec.order();
  const QMatrix m = cayley_matrix(spec, rho);
  const InverseProfile inv = inverse_profile(spec, rho);
  auto Y = [&](int g) -> const mpq_class& { return inv.y[static_cast<std::size_t>(g)]; };
  const std::string label = group_label(spec, rho);

  for (int i = 0; i < n; ++i) {
    const std::array<int, 1> rm{i};
    report.expect_equal(principal_minor(m, rm), inv.delta * Y(tables.twice(i)), label + " M(" + std::to_string(i) + ")");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::array<int, 2> rm{i, j};
      const mpq_class& yij = Y(tables.add(i, j));
      report.expect_equal(principal_minor(m, rm), inv.delta * (Y(tables.twice(i)) * Y(tables.twice(j)) - yij * yij),
                          label + " M(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const std::array<int, 3> rm{i, j, k};
        report.expect_equal(principal_minor(m, rm), inv.delta * gamma(tables, inv.y, i, j, k),
                            label + " M(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return report;
}

mpq_class f1(const QMatrix& a) {
  mpq_class total = 0;
  for (int i = 0; i < a.rows(); ++i) {
    const std::array<int, 1> rm{i};
    total += a(i, i) * principal_minor(a, rm);
  }
  return total;
}

mpq_class t2(const QMatrix& a) {
  mpq_class total = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.rows(); ++j) {
      mpq_class w = a(i, j) * a(j, i);
      if (sgn(w) == 0) continue;
      const std::array<int, 2> rm{i, j};
      total += w * principal_minor(a, rm);
    }
  return total;
}

mpq_class t12(const QMatrix& a) {
  mpq_class total = 0;
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (i == j || i == k) continue;
        mpq_class w = a(i, i) * a(j, k) * a(k, j);
        if (sgn(w) == 0) continue;
        const std::array<int, 3> rm{i, j, k};
        total += w * principal_minor(a, rm);
      }
  return total;
}

mpq_class F1(const GroupSpec& spec, const RationalSpecialization& rho) { return f1(cayley_matrix(spec, rho)); }
mpq_class T2(const GroupSpec& spec, const RationalSpecialization& rho) { return t2(cayley_matrix(spec, rho)); }
mpq_class T12(const GroupSpec& spec, const RationalSpecialization& rho) { return t12(cayley_matrix(spec, rho)); }

ProofScalars proof_scalars(const GroupSpec& spec, const RationalSpecialization& rho) {
  const int n = spec.order();
  if (n % 2 == 0)
    throw PreconditionError("proof scalars need odd |G|; " + spec.to_string() + " has order " + std::to_string(n));
  GroupTables tables(spec);
  const InverseProfile inv = inverse_profile(spec, rho);
  auto X = [&](int g) -> const mpq_class& { return rho.values[static_cast<std::size_t>(g)]; };
  auto Y = [&](int g) -> const mpq_class& { return inv.y[static_cast<std::size_t>(g)]; };

  ProofScalars out;
  for (int s = 0; s < n; ++s) {
    const mpq_class xs2 = X(s) * X(s);
    mpq_class inner = 0;
    for (int t = 0; t < n; ++t) inner += Y(t) * Y(tables.sub(tables.twice(s), t));
    out.C += xs2 * inner;
    out.S += xs2 * Y(s) * Y(s);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const mpq_class& xij = X(tables.add(i, j));
      const mpq_class& yij = Y(tables.add(i, j));
      out.t2_double_sum += xij * xij * (Y(tables.twice(i)) * Y(tables.twice(j)) - yij * yij);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const mpq_class& xjk = X(tables.add(j, k));
        const mpq_class w = X(tables.twice(i)) * xjk * xjk;
        const mpq_class& yii = Y(tables.twice(i));
        const mpq_class& yjj = Y(tables.twice(j));
        const mpq_class& ykk = Y(tables.twice(k));
        const mpq_class& yij = Y(tables.add(i, j));
        const mpq_class& yik = Y(tables.add(i, k));
        const mpq_class& yjk = Y(tables.add(j, k));
        out.B1 += w * yii * yjj * ykk;
        out.B2 += w * yij * yik * yjk;
        out.B3 += w * yii * yjk * yjk;
        out.B4 += w * yjj * yik * yik;
        out.B5 += w * ykk * yij * yij;
      }
  const QMatrix m = cayley_matrix(spec, rho);
  out.two_t2_over_delta = 2 * t2(m) / inv.delta;
  out.two_t12_over_delta = 2 * t12(m) / inv.delta;
  return out;
}

CheckReport proof_scalar_check(const GroupSpec& spec, const ProofScalars& s) {
  CheckReport report{"scalars", 0, {}};
  const mpq_class n = spec.order();
  const mpq_class target = s.C - n * s.S;
  report.expect_equal(s.two_t2_over_delta, s.t2_double_sum, "2T2/Delta = sum x_{i+j}^2 (y_2i y_2j - y_{i+j}^2)");
  report.expect_equal(s.t2_double_sum, target, "2T2/Delta = C - nS");
  report.expect_equal(s.B1, s.C, "B1 = C");
  report.expect_equal(s.B2, s.S, "B2 = S");
  report.expect_equal(s.B3, n * s.S, "B3 = nS");
  report.expect_equal(s.B4, s.S, "B4 = S");
  report.expect_equal(s.B5, s.S, "B5 = S");
  report.expect_equal(s.two_t12_over_delta, target, "2T12/Delta = C - nS");
  report.expect_equal(s.B1 + 2 * s.B2 - s.B3 - s.B4 - s.B5, s.two_t12_over_delta, "B1 + 2B2 - B3 - B4 - B5 = 2T12/Delta");
  return report;
}

CheckReport reduction_check(const GroupSpec& spec, const RationalSpecialization& rho,
                            const std::optional<GroupPolynomial>& twin) {
  if (spec.order() < 6) throw PreconditionError("twin reduction needs |G| >= 6");
  CheckReport report{"reduction", 0, {}};
  const mpq_class lhs = twin ? twin->evaluate(rho) : twin_difference(spec).evaluate(rho);
  const QMatrix m = cayley_matrix(spec, rho);
  const mpq_class rhs = f1(m) - bareiss_determinant(m) + 2 * (t12(m) - t2(m));
  report.expect_equal(lhs, rhs, group_label(spec, rho) + " twin difference vs F1 - det + 2(T12 - T2)");
  return report;
}

}  // namespace cayley
