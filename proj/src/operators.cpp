#include "singular_weyl/operators.hpp"

#include <cmath>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/harmonic.hpp"

namespace sw {

namespace {

const Complex kI(0.0, 1.0);

// Richardson extrapolation of a 4th-order estimate evaluated at h, h/2, ...
template <typename Estimate>
Complex richardson(Estimate&& estimate, double h, int levels) {
  std::vector<Complex> table;
  for (int i = 0; i <= levels; ++i) table.push_back(estimate(h / std::ldexp(1.0, i)));
  double factor = 16.0;
  for (int k = 1; k <= levels; ++k) {
    for (int i = levels; i >= k; --i) table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
    factor *= 4.0;
  }
  return table.back();
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kappa: return "kappa";
    case OperatorKind::eta_plus: return "eta+";
    case OperatorKind::eta_minus: return "eta-";
    case OperatorKind::omega: return "omega";
    case OperatorKind::E_plus: return "E+";
    case OperatorKind::E_minus: return "E-";
    case OperatorKind::sl2: return "sl2";
    case OperatorKind::heisenberg: return "heisenberg";
  }
  return "?";
}

double fd_step(double value, const Tolerances& tol) { return tol.fd_step * std::max(1.0, std::abs(value)); }

Complex fd_dscalar(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol) {
  return richardson(
      [&](double h) {
        return (-f(t + 2 * h, x) + 8.0 * f(t + h, x) - 8.0 * f(t - h, x) + f(t - 2 * h, x)) / (12.0 * h);
      },
      fd_step(t, tol), tol.fd_richardson_levels);
}

Complex fd_dvector(const Field& f, double t, const Eigen::VectorXd& x, int j, const Tolerances& tol) {
  if (j < 1 || j > x.size()) throw DomainError("fd_dvector: coordinate index out of range");
  const auto i = static_cast<Eigen::Index>(j - 1);
  Eigen::VectorXd p = x;
  const auto at = [&](double offset) {
    p[i] = x[i] + offset;
    return f(t, p);
  };
  return richardson(
      [&](double h) { return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h); },
      fd_step(x[i], tol), tol.fd_richardson_levels);
}

Complex fd_laplacian(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol) {
  const Complex center = f(t, x);
  Complex sum(0.0);
  Eigen::VectorXd p = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto at = [&](double offset) {
      p[i] = x[i] + offset;
      const Complex v = f(t, p);
      p[i] = x[i];
      return v;
    };
    sum += richardson(
        [&](double h) {
          return (-at(2 * h) + 16.0 * at(h) - 30.0 * center + 16.0 * at(-h) - at(-2 * h)) / (12.0 * h * h);
        },
        fd_step(x[i], tol), tol.fd_richardson_levels);
  }
  return sum;
}

Complex fd_euler(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol) {
  Complex sum(0.0);
  for (int j = 1; j <= x.size(); ++j) {
    if (x[j - 1] != 0.0) sum += x[j - 1] * fd_dvector(f, t, x, j, tol);
  }
  return sum;
}

namespace {

Complex fd_sl2(Complex a, Complex b, Complex c, const Field& f, const ParameterSet& params, double t,
               const Eigen::VectorXd& x, const Tolerances& tol) {
  const double r = params.r();
  const Complex s = params.s();
  const Complex euler_coeff = c * t - a;
  const Complex dt_coeff = c * t * t - 2.0 * a * t - b;
  Complex out = (r * a - c * s * x.squaredNorm() - r * c * t) * f(t, x);
  if (euler_coeff != Complex(0.0)) out += euler_coeff * fd_euler(f, t, x, tol);
  if (dt_coeff != Complex(0.0)) out += dt_coeff * fd_dscalar(f, t, x, tol);
  return out;
}

}  // namespace

Complex fd_apply(const OperatorSpec& spec, const Field& f, const ParameterSet& params, double scalar,
                 const Eigen::VectorXd& vec, const Tolerances& tol) {
  if (vec.size() != params.n()) throw DomainError("fd_apply: point has the wrong dimension");
  const Complex s = params.s();
  const double n = params.n();
  const bool is_E = spec.kind == OperatorKind::E_plus || spec.kind == OperatorKind::E_minus;
  if (is_E && (spec.j < 1 || spec.j > params.n())) throw DomainError("fd_apply: E_j needs 1 <= j <= n");
  const double sign = (spec.kind == OperatorKind::eta_plus || spec.kind == OperatorKind::E_plus) ? 1.0 : -1.0;

  if (spec.picture == Picture::compact) {
    const double theta = scalar;
    const Eigen::VectorXd& y = vec;
    switch (spec.kind) {
      case OperatorKind::kappa:
        return kI * fd_dscalar(f, theta, y, tol);
      case OperatorKind::eta_plus:
      case OperatorKind::eta_minus: {
        const Complex inner = -fd_euler(f, theta, y, tol) - sign * kI * fd_dscalar(f, theta, y, tol) -
                              (n / 2.0 + sign * 2.0 * kI * s * y.squaredNorm()) * f(theta, y);
        return 0.5 * std::exp(-sign * 2.0 * kI * theta) * inner;
      }
      case OperatorKind::omega: {
        const double rho2 = y.squaredNorm();
        return rho2 * (4.0 * s * fd_dscalar(f, theta, y, tol) + 4.0 * s * s * rho2 * f(theta, y) +
                       fd_laplacian(f, theta, y, tol));
      }
      case OperatorKind::E_plus:
      case OperatorKind::E_minus:
        return std::exp(-sign * kI * theta) *
               (sign * kI * fd_dvector(f, theta, y, spec.j, tol) - 2.0 * s * y[spec.j - 1] * f(theta, y));
      default:
        throw DomainError("fd_apply: " + to_string(spec.kind) + " is a non-compact picture operator");
    }
  }

  const double t = scalar;
  const Eigen::VectorXd& x = vec;
  switch (spec.kind) {
    case OperatorKind::sl2:
      return fd_sl2(spec.a, spec.b, spec.c, f, params, t, x, tol);
    case OperatorKind::kappa:
      return fd_sl2(0.0, -kI, kI, f, params, t, x, tol);
    case OperatorKind::eta_plus:
    case OperatorKind::eta_minus:
      return fd_sl2(0.5, sign * 0.5 * kI, sign * 0.5 * kI, f, params, t, x, tol);
    case OperatorKind::heisenberg: {
      if (spec.u.size() != x.size() || spec.v.size() != x.size()) {
        throw DomainError("fd_apply: heisenberg vectors have the wrong dimension");
      }
      Complex out = s * (spec.w - 2.0 * spec.v.dot(x)) * f(t, x);
      for (int j = 1; j <= x.size(); ++j) {
        const double coeff = -spec.u[j - 1] + t * spec.v[j - 1];
        if (coeff != 0.0) out += coeff * fd_dvector(f, t, x, j, tol);
      }
      return out;
    }
    case OperatorKind::E_plus:
    case OperatorKind::E_minus:
      return (sign * kI + t) * fd_dvector(f, t, x, spec.j, tol) - 2.0 * s * x[spec.j - 1] * f(t, x);
    default:
      throw DomainError("fd_apply: omega is only available in the compact picture");
  }
}

Complex pde_residual_noncompact(const Field& f, double lambda, Complex s, double t, const Eigen::VectorXd& x,
                                const Tolerances& tol) {
  const double r2 = x.squaredNorm();
  if (std::sqrt(r2) < 10.0 * tol.fd_step) throw SingularityError("pde_residual_noncompact: x too close to 0");
  const Complex value = f(t, x);
  Complex out = fd_laplacian(f, t, x, tol) - 2.0 * lambda / r2 * value;
  out += 4.0 * s * fd_dscalar(f, t, x, tol);
  return out;
}

LinearCombination apply_kappa(const KTypeVector& F) {
  LinearCombination out;
  out.add(0.5 * F.index().m, F);
  return out;
}

LinearCombination apply_eta(const KTypeVector& F, int sign) {
  const auto& idx = F.index();
  const int numerator = (sign > 0 ? idx.m : -idx.m) + 4 * idx.l + 2 * idx.k + F.n();
  LinearCombination out;
  if (numerator == 0) return out;
  const int step = sign > 0 ? 4 : -4;
  out.add(-0.25 * numerator, with_weight(F, idx.m + step));
  return out;
}

std::string to_string(const LadderCoefficient& c) {
  if (c.value == 0) return "0";
  return to_string(c.value) + (c.unit == LadderCoefficient::Unit::i ? "*i" : "*s");
}

std::string to_string(CoefficientTable table) {
  switch (table) {
    case CoefficientTable::derived: return "derived";
    case CoefficientTable::printed_statement: return "printed_statement";
    case CoefficientTable::printed_proof: return "printed_proof";
  }
  return "?";
}

std::array<LadderCoefficient, 4> ladder_coefficients(int n, const KTypeIndex& index, int sign,
                                                     CoefficientTable table) {
  using U = LadderCoefficient::Unit;
  const Rational L(index.l), K(index.k), N(n), M(index.m);
  const Rational A = (M + 4 * L + 2 * K + N) / 4;
  const Rational B = 2 * L + K + N / 2;
  const Rational bb1 = B * (B - 1);
  const Rational shift = 2 * L + 2 * K + N - 2;
  // Divides unless the numerator vanishes too (only l = k = 0, n = 2).
  const auto safe_div = [](const Rational& num, const Rational& den) { return den == 0 ? Rational(0) : num / den; };

  if (table == CoefficientTable::derived) {
    // (B-1-L)/(B(B-1)) with the l = 0 limit 1/B.
    const Rational g = L == 0 ? Rational(1) / B : (B - 1 - L) / bb1;
    const Rational weight = sign > 0 ? A : B - A;
    const Rational pm = sign > 0 ? 1 : -1;
    return {{{U::i, pm * 2 * L},
             {U::s, -4 * weight * g},
             {U::i, pm * shift},
             {U::s, L == 0 ? Rational(0) : -4 * L * weight / bb1}}};
  }
  if (sign > 0) {
    const Rational mm = table == CoefficientTable::printed_statement ? M + 2 * K + 4 * L + N : M + 2 * K + 2 * L + N;
    return {{{U::i, 2 * L}, {U::s, -safe_div(shift * mm, 2 * bb1)}, {U::i, shift}, {U::s, -safe_div(L * mm, bb1)}}};
  }
  const Rational lw = 4 * L + 2 * K + N - M;
  return {{{U::i, -2 * L},
           {U::s, safe_div(shift * lw, 2 * (B - 1))},
           {U::i, -shift},
           {U::s, -safe_div(L * lw, 2 * (B - 1))}}};
}

std::array<std::optional<KTypeVector>, 4> ladder_directions(const KTypeVector& F, int j, int sign) {
  const auto& idx = F.index();
  const int n = F.n();
  if (idx.k < 0) throw DomainError("Heisenberg ladder on negative k (n = 2) is not supported");
  if (j < 1 || j > n) throw DomainError("E_j needs 1 <= j <= n");
  const auto split = decompose_yj(F.harmonic(), j);
  const Polynomial radial_part = GaussianRational(split.c) * F.harmonic().polynomial().partial(j);
  std::array<std::optional<KTypeVector>, 4> out;
  const int dm = sign > 0 ? 2 : -2;
  for (std::size_t i = 0; i < kLadderTargets.size(); ++i) {
    const auto& target = kLadderTargets[i];
    const int l = idx.l + target.dl;
    const int k = idx.k + target.dk;
    if (l < 0) continue;
    if (target.dk > 0) {
      if (split.h_next.is_zero()) continue;
      out[i] = make_ktype(F.params(), idx.m + dm, l, k, split.h_next);
    } else {
      if (radial_part.is_zero()) continue;
      out[i] = make_ktype(F.params(), idx.m + dm, l, k, HarmonicPolynomial(radial_part, k));
    }
  }
  return out;
}

LinearCombination apply_E(const KTypeVector& F, int j, int sign, CoefficientTable table) {
  const auto directions = ladder_directions(F, j, sign);
  const auto coeffs = ladder_coefficients(F.n(), F.index(), sign, table);
  LinearCombination out;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (directions[i]) out.add(coeffs[i].evaluate(F.params().s()), *directions[i]);
  }
  return out;
}

}  // namespace sw
