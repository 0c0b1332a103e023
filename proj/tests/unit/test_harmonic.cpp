#include <random>

#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/harmonic.hpp"

using namespace sw;

namespace {

Polynomial y(int n, int j) { return Polynomial::variable(n, j); }

}  // namespace

TEST_CASE("laplacian and euler") {
  CHECK(laplacian(y(2, 1) * y(2, 1) - y(2, 2) * y(2, 2)).is_zero());
  CHECK(laplacian(Polynomial::rho_squared(3)) == Polynomial::constant(3, 6));
  CHECK(laplacian(y(3, 1) * y(3, 1) * y(3, 2)) == GaussianRational(2) * y(3, 2));
  CHECK(euler(Polynomial::constant(2, 1)).is_zero());
  CHECK(euler(y(2, 1) * y(2, 2)) == GaussianRational(2) * y(2, 1) * y(2, 2));
  const Polynomial p = y(2, 1).pow(3) + y(2, 2);
  CHECK(euler(p) == GaussianRational(3) * y(2, 1).pow(3) + y(2, 2));
}

TEST_CASE("harmonic bases") {
  CHECK(harmonic_basis(3, 0).size() == 1);
  CHECK(harmonic_basis(3, 2).size() == 5);
  const auto b1 = harmonic_basis(1, 1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].polynomial() == y(1, 1));
  CHECK_THROWS_AS(harmonic_basis(1, 2), DomainError);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const auto basis = harmonic_basis(n, k);
      CHECK(static_cast<std::int64_t>(basis.size()) == harmonic_dimension(n, k));
      for (const auto& h : basis) CHECK(laplacian(h.polynomial()).is_zero());
    }
  }
  CHECK(harmonic_dimension(3, 4) == 9);
  CHECK(harmonic_dimension(2, 7) == 2);
  CHECK_THROWS_AS(HarmonicPolynomial(y(2, 1) * y(2, 1), 2), DomainError);
}

TEST_CASE("c constant") {
  CHECK(c_const(0, 2) == 0);
  CHECK(c_const(1, 3) == Rational(1, 3));
  CHECK(c_const(0, 3) == 1);
  CHECK(c_const(0, 1) == -1);
}

TEST_CASE("y_j decomposition") {
  const auto one = HarmonicPolynomial(Polynomial::constant(3, 1), 0);
  auto d = decompose_yj(one, 1);
  CHECK(d.h_next.polynomial() == y(3, 1));
  CHECK(d.c == 1);

  d = decompose_yj(HarmonicPolynomial(y(3, 1), 1), 1);
  CHECK(d.c == Rational(1, 3));
  CHECK(d.h_next.polynomial() == y(3, 1) * y(3, 1) - GaussianRational(Rational(1, 3)) * Polynomial::rho_squared(3));

  d = decompose_yj(signed_harmonic(1), 1);
  CHECK(d.c == Rational(1, 2));
  CHECK(laplacian(d.h_next.polynomial()).is_zero());

  for (int n = 3; n <= 4; ++n) {
    for (const auto& h : harmonic_basis(n, 3)) {
      for (int j = 1; j <= n; ++j) {
        const auto s = decompose_yj(h, j);
        CHECK(y(n, j) * h.polynomial() ==
              s.h_next.polynomial() + Polynomial::rho_squared(n) * h.polynomial().partial(j) * GaussianRational(s.c));
      }
    }
  }
}

TEST_CASE("harmonic coordinates") {
  const auto basis = harmonic_basis(3, 2);
  Polynomial p = GaussianRational(3) * basis[1].polynomial() - GaussianRational::i() * basis[4].polynomial();
  const auto coords = harmonic_coordinates(HarmonicPolynomial(p, 2));
  REQUIRE(coords.size() == 5);
  CHECK(coords[1] == GaussianRational(3));
  CHECK(coords[4] == -GaussianRational::i());
  CHECK(coords[0].is_zero());
}

TEST_CASE("zonal harmonic recurrence matches the exact polynomial") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n = 3; n <= 5; ++n) {
    for (int k = 0; k <= 14; ++k) {
      const auto h = zonal_harmonic(n, k);
      CHECK(h.is_zonal());
      CHECK(laplacian(h.polynomial()).is_zero());
      const NumericPolynomial numeric(h.polynomial());
      for (int t = 0; t < 5; ++t) {
        Eigen::VectorXd p(n);
        for (int i = 0; i < n; ++i) p[i] = g(rng);
        const double exact = numeric(p).real();
        CHECK(std::abs(zonal_value(n, k, p.data()) - exact) <= 1e-12 * std::max(1.0, std::pow(p.norm(), k)));
      }
    }
  }
  CHECK(representative_harmonic(3, 5).is_zonal());
  CHECK(representative_harmonic(2, -3) == signed_harmonic(-3));
}
