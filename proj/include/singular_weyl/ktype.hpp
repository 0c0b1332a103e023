#pragma once

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "singular_weyl/harmonic.hpp"
#include "singular_weyl/params.hpp"

namespace sw {

/// A smooth complex function of (scalar, vector): (θ, y) in the compact
/// picture, (t, x) in the non-compact one.
using Field = std::function<Complex(double, const Eigen::VectorXd&)>;

struct CompactPoint {
  double theta = 0.0;
  Eigen::VectorXd y;
};

struct NoncompactPoint {
  double t = 0.0;
  Eigen::VectorXd x;
};

/// Seeded sample points: θ uniform in [-theta_max, theta_max], ‖y‖ uniform in
/// [rho_min, rho_max] along a uniformly random direction.
CompactPoint sample_compact(std::mt19937_64& rng, int n, double rho_min = 0.2, double rho_max = 2.0,
                            double theta_max = 1.2);
/// t uniform in [-t_max, t_max], ‖x‖ uniform in [r_min, r_max].
NoncompactPoint sample_noncompact(std::mt19937_64& rng, int n, double r_min = 0.3, double r_max = 2.0,
                                  double t_max = 1.5);

/// The K-finite vector
///   F_{m,l,k}(θ,y) = e^{-imθ/2} e^{-isρ²} ρ^{2l} h(y) 1F1(a; b; 2isρ²),
///   a = (m+4l+2k+n)/4,  b = 2l+k+n/2.
class KTypeVector {
 public:
  const ParameterSet& params() const { return params_; }
  const KTypeIndex& index() const { return index_; }
  const HarmonicPolynomial& harmonic() const { return h_->poly; }
  Eigenvalue lambda() const { return lambda_; }
  int n() const { return params_.n(); }

  /// Kummer parameters as exact rationals.
  Rational a_exact() const;
  Rational b_exact() const;

  Complex operator()(double theta, const Eigen::VectorXd& y) const;

  /// Same index and identical harmonic component.
  bool same_index_and_harmonic(const KTypeVector& o) const {
    return index_ == o.index_ && (h_ == o.h_ || h_->poly.polynomial() == o.h_->poly.polynomial());
  }

 private:
  // Shared between copies and weight shifts; the exact polynomial is only
  // converted to floating point once.
  struct Harmonic {
    HarmonicPolynomial poly;
    NumericPolynomial numeric;
  };

  KTypeVector(ParameterSet params, KTypeIndex index, std::shared_ptr<const Harmonic> h, Eigenvalue lambda);
  Complex harmonic_value(const Eigen::VectorXd& y) const;
  friend KTypeVector make_ktype(const ParameterSet&, int, int, int, const HarmonicPolynomial&);
  friend KTypeVector make_ktype_unchecked(const ParameterSet&, int, int, int, const HarmonicPolynomial&);
  friend KTypeVector with_weight(const KTypeVector&, int);

  ParameterSet params_;
  KTypeIndex index_;
  std::shared_ptr<const Harmonic> h_;
  Eigenvalue lambda_;
  double a_;
  double b_;
};

/// Validated construction. Throws CongruenceError (m ≢ 2k+q mod 4),
/// AdmissibilityError ((l,k) does not give an admissible λ), or DomainError
/// (zero h, degree mismatch, k out of range for n).
KTypeVector make_ktype(const ParameterSet& params, int m, int l, int k, const HarmonicPolynomial& h);

/// F_{m,l,k} with the same (l, k, h) as F. Throws CongruenceError unless
/// m ≡ F.index().m mod 4.
KTypeVector with_weight(const KTypeVector& F, int m);

/// Skips the congruence check. Only for negative controls in tests.
KTypeVector make_ktype_unchecked(const ParameterSet& params, int m, int l, int k,
                                 const HarmonicPolynomial& h);

Complex eval_compact(const KTypeVector& F, const CompactPoint& p);

/// f(t,x) = (1+t²)^{-n/4} e^{st‖x‖²/(1+t²)} F(arctan t, x (1+t²)^{-1/2}).
Field to_noncompact(Field F, int n, Complex s);
Field to_noncompact(const KTypeVector& F);

/// F(θ,y) = (cos θ)^{-n/2} e^{-s‖y‖² tan θ} f(tan θ, y sec θ) on |θ| < π/2,
/// extended to all θ by F(θ+jπ, (-1)^j y) = i^{-jq} F(θ, y). Throws
/// SingularityError when cos θ vanishes.
Complex compact_of_noncompact(const Field& f, const ParameterSet& params, double theta,
                              const Eigen::VectorXd& y);

/// F(θ+jπ, (-1)^j y) - i^{-jq} F(θ, y).
Complex periodicity_residual(const KTypeVector& F, double theta, const Eigen::VectorXd& y, int j);

/// i^e for integer e, exact.
Complex i_power(int e);

/// Finite formal sum Σ c_i F_i. Like terms (same index and harmonic) merge,
/// zero coefficients are dropped.
class LinearCombination {
 public:
  struct Term {
    Complex coefficient;
    KTypeVector vector;
  };

  LinearCombination() = default;

  void add(Complex coefficient, const KTypeVector& vector);
  void add(const LinearCombination& other, Complex scale = 1.0);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex operator()(double theta, const Eigen::VectorXd& y) const;

  /// Rewrites every harmonic component in the deterministic basis of its
  /// ℋ_k so that equal vectors have equal term lists; terms sorted by index.
  LinearCombination normalized() const;

  /// Coefficient of the given index (summed over harmonic components), 0 if absent.
  Complex coefficient_of(const KTypeIndex& index) const;

 private:
  std::vector<Term> terms_;
};

nlohmann::ordered_json to_json(const KTypeVector& F);
nlohmann::ordered_json complex_json(Complex z);

}  // namespace sw
