#pragma once

// Kummer's confluent hypergeometric function 1F1(a; b; z) of complex argument,
// Pochhammer symbols and the contiguous relations used by the ladder formulas.

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/tolerances.hpp"

namespace sw {

/// Rising factorial (a)_j = a(a+1)...(a+j-1); (a)_0 = 1.
template <typename Real>
std::complex<Real> pochhammer(std::complex<Real> a, int j) {
  if (j < 0) throw DomainError("pochhammer: j must be >= 0");
  std::complex<Real> p(1);
  for (int i = 0; i < j; ++i) p *= a + Real(i);
  return p;
}

template <typename Real>
bool is_nonpositive_integer(std::complex<Real> b) {
  if (b.imag() != Real(0)) return false;
  const Real r = b.real();
  return r <= Real(0) && r == std::round(r);
}

/// Value of the series together with Σ|term|, the natural scale for rounding
/// error when terms cancel.
template <typename Real>
struct SeriesValue {
  std::complex<Real> value;
  Real magnitude;
  int terms;
};

/// Direct power series Σ (a)_j/(b)_j z^j/j!.
template <typename Real>
SeriesValue<Real> hyp1f1_series(std::complex<Real> a, std::complex<Real> b, std::complex<Real> z,
                                 const Tolerances& tol = default_tolerances()) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("hyp1f1: b must not be a non-positive integer");
  }
  std::complex<Real> term(1);
  std::complex<Real> sum(1);
  Real magnitude(1);
  int small_run = 0;
  for (int j = 0; j < tol.series_max_terms; ++j) {
    const std::complex<Real> ratio = (a + Real(j)) / ((b + Real(j)) * Real(j + 1)) * z;
    term *= ratio;
    sum += term;
    const Real t = std::abs(term);
    magnitude += t;
    // Terms can dip transiently while |ratio| > 1, so only count a run once
    // the series is contracting.
    if (t <= Real(tol.series_rel_tol) * std::abs(sum) && std::abs(ratio) < Real(1)) {
      if (++small_run >= tol.series_small_run) return {sum, magnitude, j + 2};
    } else {
      small_run = 0;
    }
    if (term == std::complex<Real>(0)) return {sum, magnitude, j + 2};
  }
  throw ConvergenceError("hyp1f1: series did not converge within " +
                         std::to_string(tol.series_max_terms) + " terms");
}

/// 1F1(a; b; z).
template <typename Real>
std::complex<Real> hyp1f1(std::complex<Real> a, std::complex<Real> b, std::complex<Real> z,
                          const Tolerances& tol = default_tolerances()) {
  return hyp1f1_series(a, b, z, tol).value;
}

inline std::complex<double> hyp1f1(double a, double b, std::complex<double> z) {
  return hyp1f1<double>({a, 0.0}, {b, 0.0}, z);
}

namespace detail {

inline std::complex<double> hyp1f1_real_series(double a, double b, std::complex<double> z, const Tolerances& tol) {
  double tr = 1.0, ti = 0.0, sr = 1.0, si = 0.0;
  const double zr = z.real(), zi = z.imag();
  const double z2 = zr * zr + zi * zi;
  const double eps2 = tol.series_rel_tol * tol.series_rel_tol;
  int small_run = 0;
  for (int j = 0; j < tol.series_max_terms; ++j) {
    const double rho = (a + j) / ((b + j) * (j + 1));
    const double nr = rho * (tr * zr - ti * zi);
    ti = rho * (tr * zi + ti * zr);
    tr = nr;
    sr += tr;
    si += ti;
    const double t2 = tr * tr + ti * ti;
    if (t2 <= eps2 * (sr * sr + si * si) && rho * rho * z2 < 1.0) {
      if (++small_run >= tol.series_small_run) return {sr, si};
    } else {
      small_run = 0;
    }
    if (t2 == 0.0) return {sr, si};
  }
  throw ConvergenceError("hyp1f1: series did not converge within " +
                         std::to_string(tol.series_max_terms) + " terms");
}

}  // namespace detail

/// Real a, b and complex z: the case every K-type evaluation hits. Same
/// stopping rule as hyp1f1_series, without complex divisions or square roots.
/// For Re z < 0 the series alternates and cancels, so Kummer's transformation
/// 1F1(a;b;z) = e^z 1F1(b-a;b;-z) is used instead.
inline std::complex<double> hyp1f1_real_params(double a, double b, std::complex<double> z,
                                               const Tolerances& tol = default_tolerances()) {
  if (b <= 0.0 && b == std::round(b)) throw DomainError("hyp1f1: b must not be a non-positive integer");
  if (z.real() < 0.0) return std::exp(z) * detail::hyp1f1_real_series(b - a, b, -z, tol);
  return detail::hyp1f1_real_series(a, b, z, tol);
}

/// d^order/dz^order 1F1(a; b; z) = (a)_order/(b)_order 1F1(a+order; b+order; z).
template <typename Real>
std::complex<Real> hyp1f1_derivative(std::complex<Real> a, std::complex<Real> b,
                                     std::complex<Real> z, int order,
                                     const Tolerances& tol = default_tolerances()) {
  if (order < 1) throw DomainError("hyp1f1_derivative: order must be >= 1");
  if (is_nonpositive_integer(b) || is_nonpositive_integer(b + Real(order))) {
    throw DomainError("hyp1f1_derivative: b must not be a non-positive integer");
  }
  const std::complex<Real> ratio = pochhammer(a, order) / pochhammer(b, order);
  if (ratio == std::complex<Real>(0)) return ratio;
  return ratio * hyp1f1(a + Real(order), b + Real(order), z, tol);
}

/// Term-by-term derivative of the power series. Independent of the
/// parameter-shift formula, which is what makes U0 a real check.
template <typename Real>
SeriesValue<Real> hyp1f1_series_derivative(std::complex<Real> a, std::complex<Real> b,
                                           std::complex<Real> z,
                                           const Tolerances& tol = default_tolerances()) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("hyp1f1: b must not be a non-positive integer");
  }
  // d/dz Σ c_j z^j = Σ j c_j z^{j-1}; c_j = (a)_j/((b)_j j!).
  std::complex<Real> coeff(1);   // c_j
  std::complex<Real> zpow(1);    // z^{j-1}
  std::complex<Real> sum(0);
  Real magnitude(0);
  int small_run = 0;
  for (int j = 1; j <= tol.series_max_terms; ++j) {
    coeff *= (a + Real(j - 1)) / ((b + Real(j - 1)) * Real(j));
    const std::complex<Real> term = Real(j) * coeff * zpow;
    zpow *= z;
    sum += term;
    const Real t = std::abs(term);
    magnitude += t;
    const bool contracting = std::abs(z) < Real(j) || coeff == std::complex<Real>(0);
    if (j > 1 && t <= Real(tol.series_rel_tol) * std::abs(sum) && contracting) {
      if (++small_run >= tol.series_small_run) return {sum, magnitude, j};
    } else {
      small_run = 0;
    }
    if (coeff == std::complex<Real>(0)) return {sum, magnitude, j};
  }
  throw ConvergenceError("hyp1f1_series_derivative: series did not converge");
}

/// The contiguous relations of 1F1 used by the ladder computations.
///
/// U0..U4 are the standard contiguous relations (U3 with the '+' that
/// the printed form drops). Uno combines U1 at a+1 with U4; Dos combines U4
/// at b+1 with U2. DosAsPrinted keeps the coefficient -(b-a)/(b-1), which is
/// not an identity; it exists so reports can show the erratum.
enum class ContiguousRelation { U0, U1, U2, U3, U4, Uno, Dos, DosAsPrinted };

inline std::string_view to_string(ContiguousRelation rel) {
  switch (rel) {
    case ContiguousRelation::U0: return "U0";
    case ContiguousRelation::U1: return "U1";
    case ContiguousRelation::U2: return "U2";
    case ContiguousRelation::U3: return "U3";
    case ContiguousRelation::U4: return "U4";
    case ContiguousRelation::Uno: return "Uno";
    case ContiguousRelation::Dos: return "Dos";
    case ContiguousRelation::DosAsPrinted: return "DosAsPrinted";
  }
  return "?";
}

inline ContiguousRelation contiguous_relation_from_string(std::string_view name) {
  for (auto rel : {ContiguousRelation::U0, ContiguousRelation::U1, ContiguousRelation::U2,
                   ContiguousRelation::U3, ContiguousRelation::U4, ContiguousRelation::Uno,
                   ContiguousRelation::Dos, ContiguousRelation::DosAsPrinted}) {
    if (to_string(rel) == name) return rel;
  }
  throw DomainError("unknown contiguous relation '" + std::string(name) + "'");
}

template <typename Real>
struct ContiguousResidual {
  std::complex<Real> residual;
  /// Σ |coefficient| * Σ|series terms| over the participating 1F1 values.
  Real scale;
  Real relative() const { return std::abs(residual) / std::max(scale, Real(1e-300)); }
};

/// LHS - RHS of the named relation, each 1F1 evaluated by its power series.
template <typename Real>
ContiguousResidual<Real> contiguous_residual(ContiguousRelation rel, std::complex<Real> a,
                                             std::complex<Real> b, std::complex<Real> z,
                                             const Tolerances& tol = default_tolerances()) {
  using C = std::complex<Real>;
  const C one(1);
  C residual(0);
  Real scale(0);
  // Accumulates coefficient * 1F1(aa; bb; z).
  const auto add = [&](C coeff, C aa, C bb) {
    if (coeff == C(0)) return;
    const auto m = hyp1f1_series(aa, bb, z, tol);
    residual += coeff * m.value;
    scale += std::abs(coeff) * m.magnitude;
  };
  switch (rel) {
    case ContiguousRelation::U0: {
      const auto d = hyp1f1_series_derivative(a, b, z, tol);
      residual += d.value;
      scale += d.magnitude;
      add(-a / b, a + one, b + one);
      break;
    }
    case ContiguousRelation::U1:
      add(b, a, b);
      add(-b, a - one, b);
      add(-z, a, b + one);
      break;
    case ContiguousRelation::U2:
      add(b * (one - b + z), a, b);
      add(b * (b - one), a - one, b - one);
      add(-a * z, a + one, b + one);
      break;
    case ContiguousRelation::U3:
      add(a - one + z, a, b);
      add(b - a, a - one, b);
      add(one - b, a, b - one);
      break;
    case ContiguousRelation::U4:
      add(a - b + one, a, b);
      add(-a, a + one, b);
      add(b - one, a, b - one);
      break;
    case ContiguousRelation::Uno:
      add(one, a, b);
      add(-one, a, b - one);
      add(a * z / (b * (b - one)), a + one, b + one);
      break;
    case ContiguousRelation::Dos:
      add(one, a, b);
      add(-one, a - one, b - one);
      add(-(b - a) * z / (b * (b - one)), a, b + one);
      break;
    case ContiguousRelation::DosAsPrinted:
      add(one, a, b);
      add(-one, a - one, b - one);
      add((b - a) / (b - one) * z, a, b + one);
      break;
  }
  return {residual, scale};
}

}  // namespace sw
