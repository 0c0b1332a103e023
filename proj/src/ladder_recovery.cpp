#include "singular_weyl/ladder_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace sw {

namespace {

Complex unit_value(LadderCoefficient::Unit unit, Complex s) {
  return unit == LadderCoefficient::Unit::i ? Complex(0.0, 1.0) : s;
}

}  // namespace

LadderRecovery recover_ladder(const KTypeVector& F, int j, int sign, std::uint64_t seed, const Tolerances& tol,
                              CoefficientTable printed) {
  LadderRecovery out;
  out.index = F.index();
  out.j = j;
  out.sign = sign;
  out.points = std::max<std::size_t>(tol.lsq_min_points, 40);
  out.derived = ladder_coefficients(F.n(), F.index(), sign, CoefficientTable::derived);
  out.printed = ladder_coefficients(F.n(), F.index(), sign, printed);
  // 4b(b-1) = 2b(2b-2) with 2b = 4l+2k+n an integer.
  const std::int64_t two_b = 4 * F.index().l + 2 * F.index().k + F.n();
  out.denominator_bound = std::max<std::int64_t>(1, std::abs(two_b * (two_b - 2)));

  const auto directions = ladder_directions(F, j, sign);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    out.present[i] = directions[i].has_value();
    if (out.present[i]) cols.push_back(i);
  }

  const Field field = [&F](double theta, const Eigen::VectorXd& y) { return F(theta, y); };
  const auto spec = OperatorSpec::E(j, sign);
  std::mt19937_64 rng(seed);
  const auto P = static_cast<Eigen::Index>(out.points);
  const auto D = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXcd A(P, D);
  Eigen::VectorXcd rhs(P);
  for (Eigen::Index p = 0; p < P; ++p) {
    const auto pt = sample_compact(rng, F.n());
    rhs[p] = fd_apply(spec, field, F.params(), pt.theta, pt.y, tol);
    for (Eigen::Index c = 0; c < D; ++c) A(p, c) = (*directions[cols[c]])(pt.theta, pt.y);
  }

  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(D);
  if (D > 0) {
    // Columns can differ by orders of magnitude (powers of ρ), so equilibrate.
    Eigen::VectorXd norms = A.colwise().norm().transpose();
    for (Eigen::Index c = 0; c < D; ++c) {
      if (norms[c] == 0.0) norms[c] = 1.0;
    }
    const Eigen::MatrixXcd scaled = A * norms.cwiseInverse().asDiagonal();
    coeffs = scaled.colPivHouseholderQr().solve(rhs);
    coeffs = coeffs.cwiseQuotient(norms.cast<Complex>());
  }
  out.max_residual = (A * coeffs - rhs).cwiseAbs().maxCoeff() / scale;
  out.residual_ok = out.max_residual <= tol.lsq_residual;

  const Complex s = F.params().s();
  out.rational_ok = true;
  out.matches_derived = true;
  out.matches_printed = true;
  out.shifts_ok = true;
  const std::int64_t lambda = F.lambda().value();
  const std::int64_t big = 2 * F.index().l + 2 * F.index().k + F.n() - 2;
  const std::int64_t small = 2 * F.index().l;
  for (Eigen::Index c = 0; c < D; ++c) {
    const std::size_t i = cols[c];
    out.recovered[i] = coeffs[c];
    // Express the coefficient in units of its slot; the imaginary part must vanish.
    const Complex in_units = coeffs[c] / unit_value(out.derived[i].unit, s);
    const Rational r = best_rational_approximation(in_units.real(), out.denominator_bound);
    const double mag = std::max(1.0, std::abs(in_units));
    if (std::abs(in_units - Complex(to_double(r), 0.0)) <= tol.rational_match * mag) {
      out.recovered_rational[i] = r;
    } else {
      out.rational_ok = false;
    }
    if (!out.recovered_rational[i] || *out.recovered_rational[i] != out.derived[i].value) out.matches_derived = false;
    const Complex printed_value = out.printed[i].evaluate(s);
    if (std::abs(coeffs[c] - printed_value) > tol.rational_match * std::max(1.0, std::abs(coeffs[c]))) {
      out.matches_printed = false;
    }
    const std::int64_t shift = directions[i]->lambda().value() - lambda;
    out.eigenvalue_shift[i] = shift;
    if (shift != big && shift != -big && shift != small && shift != -small) out.shifts_ok = false;
  }
  return out;
}

nlohmann::ordered_json to_json(const LadderRecovery& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["operator"] = std::string(r.sign > 0 ? "E+" : "E-") + "_" + std::to_string(r.j);
  j["index"] = {{"m", r.index.m}, {"l", r.index.l}, {"k", r.index.k}};
  j["points"] = r.points;
  j["max_residual"] = r.max_residual;
  json recovered = json::array();
  json paper = json::array();
  json derived = json::array();
  json targets = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& t = kLadderTargets[i];
    targets.push_back({{"m", r.index.m + (r.sign > 0 ? 2 : -2)}, {"l", r.index.l + t.dl}, {"k", r.index.k + t.dk}});
    if (!r.present[i]) {
      recovered.push_back(nullptr);
    } else if (r.recovered_rational[i]) {
      recovered.push_back(to_string(LadderCoefficient{r.derived[i].unit, *r.recovered_rational[i]}));
    } else {
      recovered.push_back(complex_json(r.recovered[i]));
    }
    paper.push_back(to_string(r.printed[i]));
    derived.push_back(to_string(r.derived[i]));
  }
  j["targets"] = targets;
  j["recovered_coefficients"] = recovered;
  j["paper_coefficients"] = paper;
  j["derived_coefficients"] = derived;
  j["denominator_bound"] = r.denominator_bound;
  j["eigenvalue_shifts"] = r.eigenvalue_shift;
  j["match"] = r.ok();
  j["printed_match"] = r.matches_printed;
  return j;
}

}  // namespace sw
