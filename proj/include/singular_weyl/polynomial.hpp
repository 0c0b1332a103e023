#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "singular_weyl/rational.hpp"
#include "json.hpp"

namespace sw {

using Exponents = std::vector<int>;

/// Graded-lex order: total degree first, then lexicographic on exponents.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial in y_1..y_n over the Gaussian rationals.
/// No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, GaussianRational, GradedLex>;

  explicit Polynomial(int n = 1);
  Polynomial(int n, Terms terms);

  static Polynomial constant(int n, GaussianRational c);
  static Polynomial monomial(int n, Exponents e, GaussianRational c = GaussianRational(1));
  /// y_j, 1-based as in the literature.
  static Polynomial variable(int n, int j);
  /// ρ² = Σ y_j².
  static Polynomial rho_squared(int n);

  int dimension() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  bool is_real() const;
  /// Largest exponent vector in graded-lex order. Precondition: nonzero.
  const Exponents& leading_exponents() const;
  const GaussianRational& leading_coefficient() const;
  GaussianRational coefficient(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;

  /// ∂/∂y_j, 1-based.
  Polynomial partial(int j) const;

  std::complex<double> evaluate(std::span<const double> y) const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);

  int n_;
  Terms terms_;
};

/// Σ_j ∂_j² p.
Polynomial laplacian(const Polynomial& p);
/// Σ_j y_j ∂_j p.
Polynomial euler(const Polynomial& p);

/// Double-precision copy of a polynomial for fast repeated evaluation.
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(const Polynomial& p);

  std::complex<double> operator()(std::span<const double> y) const;
  std::complex<double> operator()(const Eigen::VectorXd& y) const {
    return (*this)(std::span<const double>(y.data(), static_cast<std::size_t>(y.size())));
  }

 private:
  int n_ = 0;
  std::vector<int> exponents_;  // row-major, n_ per term
  std::vector<long double> re_;
  std::vector<long double> im_;
  int max_exponent_ = 0;
};

/// All exponent vectors of total degree `degree` in n variables, graded-lex ascending.
std::vector<Exponents> monomials_of_degree(int n, int degree);

/// JSON form: [{"exponents":[e1..en], "coeff":[num,den]}] with the
/// Gaussian-rational variant "coeff":[[re_num,re_den],[im_num,im_den]].
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(int n, const nlohmann::ordered_json& j);

}  // namespace sw
