#pragma once

#include <array>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "singular_weyl/ktype.hpp"
#include "singular_weyl/tolerances.hpp"

namespace sw {

enum class Picture { compact, noncompact };

enum class OperatorKind { kappa, eta_plus, eta_minus, omega, E_plus, E_minus, sl2, heisenberg };

std::string to_string(OperatorKind kind);

/// A first-order (or, for omega, second-order) differential operator together
/// with the picture it acts in.
///
/// Compact picture, f = f(θ, y):
///   kappa      i∂θ
///   eta_±      ½ e^{∓2iθ}(-E_n ∓ i∂θ - (n/2 ± 2is‖y‖²))
///   omega      ‖y‖²(4s∂θ + 4s²‖y‖² + Δ)
///   E_±(j)     e^{∓iθ}(±i∂_j - 2s y_j)
/// Non-compact picture, f = f(t, x):
///   sl2(a,b,c) (ct-a)Σx_j∂_j + (ct²-2at-b)∂t + (ra - cs‖x‖² - rct)
///   heisenberg(u,v,w)  -u·∇ + t v·∇ + s(w - 2v·x)
///   kappa, eta_± via κ = i(e⁻-e⁺), η± = ½(h ± i(e⁺+e⁻))
///   E_±(j)     ±i∂_j + t∂_j - 2s x_j
struct OperatorSpec {
  Picture picture = Picture::compact;
  OperatorKind kind = OperatorKind::kappa;
  int j = 0;  ///< coordinate for E_±, 1-based
  Complex a, b, c;
  Eigen::VectorXd u, v;
  Complex w;

  static OperatorSpec of(Picture p, OperatorKind kind) {
    OperatorSpec spec;
    spec.picture = p;
    spec.kind = kind;
    return spec;
  }
  static OperatorSpec kappa(Picture p = Picture::compact) { return of(p, OperatorKind::kappa); }
  static OperatorSpec eta(int sign, Picture p = Picture::compact) {
    return of(p, sign > 0 ? OperatorKind::eta_plus : OperatorKind::eta_minus);
  }
  static OperatorSpec omega() { return of(Picture::compact, OperatorKind::omega); }
  static OperatorSpec E(int j, int sign, Picture p = Picture::compact) {
    OperatorSpec spec = of(p, sign > 0 ? OperatorKind::E_plus : OperatorKind::E_minus);
    spec.j = j;
    return spec;
  }
  static OperatorSpec sl2(Complex a, Complex b, Complex c) {
    OperatorSpec spec = of(Picture::noncompact, OperatorKind::sl2);
    spec.a = a;
    spec.b = b;
    spec.c = c;
    return spec;
  }
  static OperatorSpec heisenberg(Eigen::VectorXd u, Eigen::VectorXd v, Complex w) {
    OperatorSpec spec = of(Picture::noncompact, OperatorKind::heisenberg);
    spec.u = std::move(u);
    spec.v = std::move(v);
    spec.w = w;
    return spec;
  }
};

// Finite-difference building blocks: 4th-order central stencils with
// step tol.fd_step * max(1, |coordinate|) and tol.fd_richardson_levels
// levels of Richardson extrapolation.

/// ∂/∂(scalar) of f at (t, x).
Complex fd_dscalar(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol = default_tolerances());
/// ∂/∂x_j (1-based) of f at (t, x).
Complex fd_dvector(const Field& f, double t, const Eigen::VectorXd& x, int j,
                   const Tolerances& tol = default_tolerances());
/// Δ_x f at (t, x).
Complex fd_laplacian(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol = default_tolerances());
/// Σ x_j ∂_j f at (t, x).
Complex fd_euler(const Field& f, double t, const Eigen::VectorXd& x, const Tolerances& tol = default_tolerances());

/// Step used at a coordinate of magnitude |value|.
double fd_step(double value, const Tolerances& tol = default_tolerances());

/// Applies `spec` to f at the point (scalar, vec) of the spec's picture.
Complex fd_apply(const OperatorSpec& spec, const Field& f, const ParameterSet& params, double scalar,
                 const Eigen::VectorXd& vec, const Tolerances& tol = default_tolerances());

/// (4s∂t + Δ - 2λ/‖x‖²) f at (t, x). Throws SingularityError near x = 0.
Complex pde_residual_noncompact(const Field& f, double lambda, Complex s, double t, const Eigen::VectorXd& x,
                                const Tolerances& tol = default_tolerances());

// Closed-form ladder actions on single K-types.

/// κ F = (m/2) F.
LinearCombination apply_kappa(const KTypeVector& F);

/// η± F = -(±m+4l+2k+n)/4 F_{m±4,l,k}; empty when the coefficient vanishes.
LinearCombination apply_eta(const KTypeVector& F, int sign);

/// One Heisenberg ladder coefficient: value·i or value·s.
struct LadderCoefficient {
  enum class Unit { i, s };
  Unit unit = Unit::i;
  Rational value;

  Complex evaluate(Complex s) const {
    const double v = to_double(value);
    return unit == Unit::i ? Complex(0.0, v) : v * s;
  }
  friend bool operator==(const LadderCoefficient&, const LadderCoefficient&) = default;
};

std::string to_string(const LadderCoefficient& c);

enum class CoefficientTable { derived, printed_statement, printed_proof };

std::string to_string(CoefficientTable table);

/// The four target directions of E_j^± on F_{m,l,k}, in the order
///   (m±2, l-1, k+1), (m±2, l, k+1)   with harmonic part h_{k+1,j}
///   (m±2, l,   k-1), (m±2, l+1, k-1) with harmonic part c_{k,n} ∂_j h
/// where y_j h = h_{k+1,j} + c_{k,n} ρ² ∂_j h.
struct LadderTarget {
  int dl, dk;
};
inline constexpr std::array<LadderTarget, 4> kLadderTargets{{{-1, 1}, {0, 1}, {0, -1}, {1, -1}}};

/// Coefficients of E_j^± in the normalization above. `derived` is the table
/// the library ships (confirmed by the least-squares oracle); the printed
/// tables transcribe the published statement and the final line of its proof
/// into the same normalization, for comparison only.
std::array<LadderCoefficient, 4> ladder_coefficients(int n, const KTypeIndex& index, int sign,
                                                     CoefficientTable table = CoefficientTable::derived);

/// The K-types that E_j^± F can reach, paired with their harmonic components.
/// Entries whose harmonic part vanishes are returned as std::nullopt.
std::array<std::optional<KTypeVector>, 4> ladder_directions(const KTypeVector& F, int j, int sign);

/// E_j^± F as a linear combination, using the given coefficient table.
LinearCombination apply_E(const KTypeVector& F, int j, int sign,
                          CoefficientTable table = CoefficientTable::derived);

}  // namespace sw
