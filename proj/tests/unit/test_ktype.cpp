#include <numbers>
#include <random>

#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/ktype.hpp"

using namespace sw;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

void check_close(Complex got, Complex want, double tol) {
  CAPTURE(got);
  CAPTURE(want);
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

HarmonicPolynomial y1(int n) { return HarmonicPolynomial(Polynomial::variable(n, 1), 1); }
HarmonicPolynomial one(int n) { return HarmonicPolynomial(Polynomial::constant(n, 1), 0); }

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(make_ktype(ParameterSet::schrodinger(3, 0), 2, 1, 0, one(3)), CongruenceError);
  const auto F = make_ktype(ParameterSet::schrodinger(3, 2), 2, 1, 0, one(3));
  CHECK(F.lambda().value() == 3);
  // m = 0 with k = 1 needs q = 2
  CHECK_THROWS_AS(make_ktype(ParameterSet::schrodinger(3, 0), 0, 2, 1, y1(3)), CongruenceError);
  const auto G = make_ktype(ParameterSet::schrodinger(3, 2), 0, 2, 1, y1(3));
  CHECK(G.lambda().value() == 14);
  CHECK(G.a_exact() == Rational(13, 4));
  CHECK(G.b_exact() == Rational(13, 2));
  CHECK_THROWS_AS(make_ktype(ParameterSet::schrodinger(3, 0), 0, 1, 1, one(3)), DomainError);
  CHECK_THROWS_AS(make_ktype(ParameterSet::schrodinger(2, 0), 0, 1, 0, one(3)), DomainError);
  // λ = l(2l+2k+n-2) = 1·(2+2·2+4-2) = 8 is admissible for n = 4; 2 is not
  CHECK_NOTHROW(make_ktype(ParameterSet::schrodinger(4, 0), 0, 1, 2, harmonic_basis(4, 2)[0]));
}

// Reference values: direct mpmath evaluation of the defining formula.
TEST_CASE("frozen K-type values") {
  const Eigen::VectorXd y = vec({0.4, -0.2, 0.7});
  const Eigen::VectorXd x = vec({0.7, -0.4, 0.9});
  {
    const auto F = make_ktype(ParameterSet::schrodinger(3, 1), 3, 2, 1, y1(3));
    check_close(F(0.3, y), {0.159566252552643114131150086329, -0.0770792865970085354059048512497}, 1e-13);
    check_close(to_noncompact(F)(0.4, x), {0.775953026914360022527845356629, -0.256312219095016409495172375697}, 1e-13);
  }
  {
    const auto F = make_ktype(ParameterSet::heat(3, 1), 3, 2, 1, y1(3));
    check_close(F(0.3, y), {0.167732285793664738735901511631, -0.0894275118070880714273260548385}, 1e-13);
    check_close(to_noncompact(F)(0.4, x), {0.645724778205903544475535447031, -0.484235577011744305810678952588}, 1e-13);
  }
  const auto G = make_ktype(ParameterSet::schrodinger(1, 3), -5, 1, 0, one(1));
  check_close(G(1.1, vec({0.8})), {-0.814644779684180371609579628629, 0.336381407180333463817343297794}, 1e-13);
  const auto H = make_ktype(ParameterSet::heat(1, 3), -5, 1, 0, one(1));
  check_close(H(1.1, vec({0.8})), {-0.622913325480543098091422148226, 0.146897886093609177889931663249}, 1e-13);
}

TEST_CASE("boundary weights collapse to closed forms") {
  const Complex s(0.3, 0.4);
  const int l = 1, k = 1, top = 2 * k + 4 * l + 3;
  const auto h = y1(3);
  const auto low = make_ktype(ParameterSet::make(3, 1, s), -top, l, k, h);
  const auto high = make_ktype(ParameterSet::make(3, 3, s), top, l, k, h);
  const Eigen::VectorXd y = vec({0.5, 0.3, -0.6});
  const double theta = 0.7, rho2 = y.squaredNorm();
  const Complex I(0, 1);
  check_close(low(theta, y), std::exp(0.5 * top * I * theta) * std::exp(-I * s * rho2) * rho2 * y[0], 1e-13);
  check_close(high(theta, y), std::exp(-0.5 * top * I * theta) * std::exp(I * s * rho2) * rho2 * y[0], 1e-13);
  CHECK(low(theta, Eigen::VectorXd::Zero(3)) == Complex(0));
}

TEST_CASE("picture round trip and periodicity") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    const auto params = ParameterSet::heat(n, 1);
    const int k = 1;
    const auto F = make_ktype(params, 3, 1, k, harmonic_basis(n, k).back());
    const Field f = to_noncompact(F);
    for (int t = 0; t < 10; ++t) {
      const auto p = sample_compact(rng, n, 0.2, 2.0, 1.2);
      check_close(compact_of_noncompact(f, params, p.theta, p.y), F(p.theta, p.y), 1e-12);
      // the extension through periodicity agrees with F itself beyond |θ| < π/2
      const double shifted = p.theta + std::numbers::pi;
      check_close(compact_of_noncompact(f, params, shifted, p.y), F(shifted, p.y), 1e-12);
      for (int j = 1; j <= 4; ++j) CHECK(std::abs(periodicity_residual(F, p.theta, p.y, j)) <= 1e-12 * std::max(1.0, std::abs(F(p.theta, p.y))));
      CHECK(periodicity_residual(F, p.theta, p.y, 0) == Complex(0));
    }
    check_close(f(0.0, vec({0.3}).replicate(n, 1)), F(0.0, vec({0.3}).replicate(n, 1)), 1e-15);
  }
  CHECK_THROWS_AS(compact_of_noncompact(to_noncompact(make_ktype(ParameterSet::heat(1, 1), 1, 1, 0, one(1))),
                                        ParameterSet::heat(1, 1), std::numbers::pi / 2, vec({0.5})),
                  SingularityError);
}

TEST_CASE("near the pole the periodic extension matches one-sided limits") {
  const auto params = ParameterSet::schrodinger(3, 2);
  const auto F = make_ktype(params, 2, 1, 0, one(3));
  const Field f = to_noncompact(F);
  const Eigen::VectorXd y = vec({0.3, 0.2, -0.4});
  const double half = std::numbers::pi / 2;
  for (double eps : {1e-3, 1e-4}) {
    const Complex below = compact_of_noncompact(f, params, half - eps, y);
    const Complex above = compact_of_noncompact(f, params, half + eps, y);
    CHECK(std::abs(below - F(half - eps, y)) <= 1e-8);
    CHECK(std::abs(above - F(half + eps, y)) <= 1e-8);
  }
}

TEST_CASE("broken congruence breaks periodicity") {
  const auto params = ParameterSet::schrodinger(3, 0);
  const auto F = make_ktype_unchecked(params, 1, 1, 0, one(3));
  CHECK(std::abs(periodicity_residual(F, 0.2, vec({0.5, 0.1, 0.3}), 1)) > 1e-3);
}

TEST_CASE("linear combinations") {
  const auto params = ParameterSet::schrodinger(3, 0);
  const auto basis = harmonic_basis(3, 2);
  const auto F = make_ktype(params, 0, 1, 2, basis[0]);
  LinearCombination lc;
  lc.add(2.0, F);
  lc.add(-2.0, F);
  CHECK(lc.empty());
  lc.add(1.5, F);
  lc.add(Complex(0, 1), with_weight(F, 4));
  CHECK(lc.size() == 2);
  CHECK(lc.coefficient_of({4, 1, 2}) == Complex(0, 1));
  // a harmonic outside the basis gets expanded
  const HarmonicPolynomial mixed(basis[0].polynomial() + GaussianRational(2) * basis[3].polynomial(), 2);
  LinearCombination m;
  m.add(1.0, make_ktype(params, 0, 1, 2, mixed));
  const auto norm = m.normalized();
  REQUIRE(norm.size() == 2);
  CHECK(norm.terms()[0].coefficient == Complex(1));
  CHECK(norm.terms()[1].coefficient == Complex(2));
  const Eigen::VectorXd y = vec({0.2, 0.5, -0.3});
  check_close(norm(0.4, y), m(0.4, y), 1e-14);
  CHECK_THROWS_AS(with_weight(F, 2), CongruenceError);
}

TEST_CASE("json") {
  const auto F = make_ktype(ParameterSet::schrodinger(3, 2), 0, 2, 1, y1(3));
  const auto j = to_json(F);
  CHECK(j["lambda"] == 14);
  CHECK(j["m"] == 0);
  CHECK(j["s"][1] == 0.5);
}
