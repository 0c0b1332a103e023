#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/group_action.hpp"

using namespace sw;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

HarmonicPolynomial y1(int n) { return HarmonicPolynomial(Polynomial::variable(n, 1), 1); }

}  // namespace

TEST_CASE("group elements") {
  const auto d = sl2_diagonal(0.3);
  CHECK(d.a * d.d - d.b * d.c == doctest::Approx(1.0));
  CHECK(sl2_upper(0.5).b == 0.5);
  CHECK(sl2_lower(0.5).c == 0.5);
}

TEST_CASE("derivative at the identity matches the algebra") {
  for (const auto& params : {ParameterSet::schrodinger(3, 1), ParameterSet::heat(3, 1)}) {
    const auto F = make_ktype(params, 3, 2, 1, y1(3));
    const Field f = to_noncompact(F);
    const auto families = group_families(3);
    CHECK(families.size() == 3 + 3 + 3 + 1 + 2);
    for (const auto& family : families) {
      const auto c = check_group_derivative(family, f, params, 20, 7);
      CAPTURE(family.name());
      CHECK(c.ok);
      CHECK(c.points == 20);
      CHECK(c.max_residual <= 1e-5);
    }
  }
}

TEST_CASE("actions compose with the identity") {
  const auto params = ParameterSet::heat(2, 0);
  const Field f = [](double t, const Eigen::VectorXd& x) { return Complex(t + x[0], x[1]); };
  const Eigen::VectorXd x = vec({0.4, -0.3});
  const auto id = sl2_action(params, SL2Element{}, f);
  CHECK(std::abs(id(0.2, x) - f(0.2, x)) < 1e-14);
  HeisenbergElement h{Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2), 0.0};
  CHECK(std::abs(heisenberg_action(params, h, f)(0.2, x) - f(0.2, x)) < 1e-14);
  const auto rot = orthogonal_action(Eigen::MatrixXd::Identity(2, 2), f);
  CHECK(std::abs(rot(0.2, x) - f(0.2, x)) < 1e-14);
  // principal branch only: a - ct must stay positive
  const auto g = sl2_action(params, sl2_lower(1.0), f);
  CHECK_THROWS_AS(g(2.0, x), DomainError);
}

TEST_CASE("group check json") {
  const auto params = ParameterSet::schrodinger(1, 1);
  const auto F = make_ktype(params, 1, 0, 0, HarmonicPolynomial(Polynomial::constant(1, 1), 0));
  const auto c = check_group_derivative(group_families(1).front(), to_noncompact(F), params, 5, 1);
  const auto j = to_json(c);
  CHECK(j["points"] == 5);
  CHECK(j.contains("max_residual"));
}
