#include "singular_weyl/ktype.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/special_functions.hpp"

namespace sw {

namespace {

const Complex kI(0.0, 1.0);

Eigenvalue checked_lambda(int n, int l, int k) {
  if (l < 0) throw DomainError("l must be >= 0");
  const std::int64_t value = ktype_eigenvalue(n, l, k);
  if (l == 0) return Eigenvalue::zero();
  if (!is_admissible(n, value)) {
    throw AdmissibilityError("(l,k) = (" + std::to_string(l) + "," + std::to_string(k) +
                             ") gives lambda = " + std::to_string(value) +
                             ", not admissible for n = " + std::to_string(n));
  }
  return Eigenvalue::admissible(n, value);
}

void check_harmonic(const ParameterSet& params, int k, const HarmonicPolynomial& h) {
  if (h.dimension() != params.n()) throw DomainError("harmonic polynomial has the wrong dimension");
  if (h.is_zero()) throw DomainError("harmonic component must be nonzero");
  if (h.k() != k) {
    throw DomainError("harmonic degree " + std::to_string(h.k()) + " does not match k = " + std::to_string(k));
  }
}

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n, double r_min, double r_max) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(r_min, r_max);
  Eigen::VectorXd v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-8);
  return v.normalized() * radius(rng);
}

}  // namespace

CompactPoint sample_compact(std::mt19937_64& rng, int n, double rho_min, double rho_max, double theta_max) {
  std::uniform_real_distribution<double> theta(-theta_max, theta_max);
  CompactPoint p;
  p.theta = theta(rng);
  p.y = random_vector(rng, n, rho_min, rho_max);
  return p;
}

NoncompactPoint sample_noncompact(std::mt19937_64& rng, int n, double r_min, double r_max, double t_max) {
  std::uniform_real_distribution<double> t(-t_max, t_max);
  NoncompactPoint p;
  p.t = t(rng);
  p.x = random_vector(rng, n, r_min, r_max);
  return p;
}

KTypeVector::KTypeVector(ParameterSet params, KTypeIndex index, std::shared_ptr<const Harmonic> h, Eigenvalue lambda)
    : params_(params),
      index_(index),
      h_(std::move(h)),
      lambda_(lambda),
      a_(to_double(a_exact())),
      b_(to_double(b_exact())) {}

Complex KTypeVector::harmonic_value(const Eigen::VectorXd& y) const {
  if (h_->poly.is_zonal()) return zonal_value(params_.n(), h_->poly.k(), y.data());
  return h_->numeric(y);
}

Rational KTypeVector::a_exact() const {
  return Rational(index_.m + 4 * index_.l + 2 * index_.k + params_.n(), 4);
}

Rational KTypeVector::b_exact() const { return Rational(4 * index_.l + 2 * index_.k + params_.n(), 2); }

Complex KTypeVector::operator()(double theta, const Eigen::VectorXd& y) const {
  const double rho2 = y.squaredNorm();
  const Complex s = params_.s();
  Complex radial = std::exp(Complex(0.0, -0.5 * index_.m * theta) - kI * s * rho2);
  for (int i = 0; i < index_.l; ++i) radial *= rho2;
  const Complex hv = harmonic_value(y);
  if (hv == Complex(0.0) || radial == Complex(0.0)) return 0.0;
  return radial * hv * hyp1f1_real_params(a_, b_, 2.0 * kI * s * rho2);
}

KTypeVector make_ktype(const ParameterSet& params, int m, int l, int k, const HarmonicPolynomial& h) {
  check_harmonic(params, k, h);
  if (mod_floor(m - 2 * static_cast<std::int64_t>(k) - params.q(), 4) != 0) {
    throw CongruenceError("m = " + std::to_string(m) + " is not congruent to 2k+q = " +
                          std::to_string(2 * k + params.q()) + " mod 4");
  }
  return make_ktype_unchecked(params, m, l, k, h);
}

KTypeVector make_ktype_unchecked(const ParameterSet& params, int m, int l, int k,
                                 const HarmonicPolynomial& h) {
  check_harmonic(params, k, h);
  auto shared = std::make_shared<const KTypeVector::Harmonic>(KTypeVector::Harmonic{h, NumericPolynomial(h.polynomial())});
  return KTypeVector(params, {m, l, k}, std::move(shared), checked_lambda(params.n(), l, k));
}

KTypeVector with_weight(const KTypeVector& F, int m) {
  if (mod_floor(m - F.index_.m, 4) != 0) {
    throw CongruenceError("with_weight: m = " + std::to_string(m) + " changes the residue mod 4");
  }
  return KTypeVector(F.params_, {m, F.index_.l, F.index_.k}, F.h_, F.lambda_);
}

Complex eval_compact(const KTypeVector& F, const CompactPoint& p) { return F(p.theta, p.y); }

Field to_noncompact(Field F, int n, Complex s) {
  return [F = std::move(F), n, s](double t, const Eigen::VectorXd& x) -> Complex {
    const double w = 1.0 + t * t;
    const Complex pref = std::pow(w, -0.25 * n) * std::exp(s * t * x.squaredNorm() / w);
    const Eigen::VectorXd y = x / std::sqrt(w);
    return pref * F(std::atan(t), y);
  };
}

Field to_noncompact(const KTypeVector& F) {
  return to_noncompact([F](double theta, const Eigen::VectorXd& y) { return F(theta, y); }, F.n(),
                       F.params().s());
}

Complex i_power(int e) {
  switch (mod_floor(e, 4)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex compact_of_noncompact(const Field& f, const ParameterSet& params, double theta,
                              const Eigen::VectorXd& y) {
  // Reduce θ into (-π/2, π/2] with F(θ' + jπ, y) = i^{-jq} F(θ', (-1)^j y).
  const int j = static_cast<int>(std::ceil((theta - std::numbers::pi / 2) / std::numbers::pi));
  const double reduced = theta - j * std::numbers::pi;
  const double c = std::cos(reduced);
  if (std::abs(c) < 1e-12) throw SingularityError("compact_of_noncompact: cos(theta) vanishes");
  const Eigen::VectorXd yy = (j % 2 == 0) ? y : Eigen::VectorXd(-y);
  const double tn = std::tan(reduced);
  const Complex base = std::pow(c, -0.5 * params.n()) * std::exp(-params.s() * yy.squaredNorm() * tn) *
                       f(tn, yy / c);
  return i_power(-j * params.q()) * base;
}

Complex periodicity_residual(const KTypeVector& F, double theta, const Eigen::VectorXd& y, int j) {
  if (j == 0) return 0.0;
  const Eigen::VectorXd shifted = (j % 2 == 0) ? y : Eigen::VectorXd(-y);
  return F(theta + j * std::numbers::pi, shifted) - i_power(-j * F.params().q()) * F(theta, y);
}

void LinearCombination::add(Complex coefficient, const KTypeVector& vector) {
  if (coefficient == Complex(0.0)) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->vector.same_index_and_harmonic(vector)) {
      it->coefficient += coefficient;
      if (it->coefficient == Complex(0.0)) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coefficient, vector});
}

void LinearCombination::add(const LinearCombination& other, Complex scale) {
  for (const auto& t : other.terms_) add(scale * t.coefficient, t.vector);
}

Complex LinearCombination::operator()(double theta, const Eigen::VectorXd& y) const {
  Complex sum(0.0);
  for (const auto& t : terms_) sum += t.coefficient * t.vector(theta, y);
  return sum;
}

LinearCombination LinearCombination::normalized() const {
  LinearCombination out;
  for (const auto& t : terms_) {
    const auto& h = t.vector.harmonic();
    const int n = t.vector.n();
    const auto& idx = t.vector.index();
    // Negative k (n = 2) labels the one-dimensional (y1 - i y2)^{|k|} family.
    if (h.k() < 0) {
      const GaussianRational lead = h.polynomial().leading_coefficient();
      const HarmonicPolynomial monic(h.polynomial() * (GaussianRational(1) / lead), h.k());
      out.add(t.coefficient * lead.to_complex(),
              make_ktype_unchecked(t.vector.params(), idx.m, idx.l, idx.k, monic));
      continue;
    }
    const auto basis = harmonic_basis(n, h.degree());
    const auto coords = harmonic_coordinates(h);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coords[i].is_zero()) continue;
      out.add(t.coefficient * coords[i].to_complex(),
              make_ktype_unchecked(t.vector.params(), idx.m, idx.l, idx.k, basis[i]));
    }
  }
  std::stable_sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) {
    if (a.vector.index() != b.vector.index()) return a.vector.index() < b.vector.index();
    return GradedLex{}(a.vector.harmonic().polynomial().leading_exponents(),
                       b.vector.harmonic().polynomial().leading_exponents());
  });
  return out;
}

Complex LinearCombination::coefficient_of(const KTypeIndex& index) const {
  Complex sum(0.0);
  for (const auto& t : terms_) {
    if (t.vector.index() == index) sum += t.coefficient;
  }
  return sum;
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

nlohmann::ordered_json to_json(const KTypeVector& F) {
  nlohmann::ordered_json j;
  j["n"] = F.n();
  j["q"] = F.params().q();
  j["s"] = complex_json(F.params().s());
  j["m"] = F.index().m;
  j["l"] = F.index().l;
  j["k"] = F.index().k;
  j["lambda"] = F.lambda().value();
  j["h"] = to_json(F.harmonic().polynomial());
  return j;
}

}  // namespace sw
