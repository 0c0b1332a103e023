#include <random>

#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/special_functions.hpp"

using namespace sw;
using C = std::complex<double>;

namespace {

void check_close(C got, C want, double tol) {
  CAPTURE(got);
  CAPTURE(want);
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(C(3), 0) == C(1));
  CHECK(pochhammer(C(2), 3) == C(24));
  CHECK(pochhammer(C(-1), 3) == C(0));
}

// Reference values from mpmath.hyp1f1 at 40 digits.
TEST_CASE("hyp1f1 frozen values") {
  check_close(hyp1f1(C(1.5), C(2.5), C(0.75)), C(1.5980796310683974096, 0), 1e-14);
  check_close(hyp1f1(C(0.25), C(1.5), C(0, -2)), C(0.85708587921632664317, -0.2693867243493770989), 1e-14);
  check_close(hyp1f1(C(2, 1), C(3.5, -0.5), C(-1.5, 2)), C(0.21921276491766807365, 0.042746447840153023521), 1e-13);
  check_close(hyp1f1(C(7.5), C(3.5), C(-4)), C(0.00042490493148467573331, 0), 1e-12);
  check_close(hyp1f1(C(-3), C(2.5), C(1.7)), C(-0.17391746031746030616, 0), 1e-14);
  check_close(hyp1f1(C(2.75), C(5.5), C(0, -1.8)), C(0.58378982884955178037, -0.73566755014706875702), 1e-14);
  check_close(hyp1f1(C(10), C(20), C(6, -6)), C(-19.420217578611430368, 5.7237266785693799049), 1e-12);
}

TEST_CASE("real-parameter evaluator matches the generic series") {
  check_close(hyp1f1_real_params(7.5, 3.5, C(-4)), C(0.00042490493148467573331, 0), 1e-13);
  check_close(hyp1f1_real_params(2.75, 5.5, C(0, -1.8)), C(0.58378982884955178037, -0.73566755014706875702), 1e-14);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-6, 6), pos(0.5, 12);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = pos(rng);
    const C z(u(rng), u(rng));
    check_close(hyp1f1_real_params(a, b, z), hyp1f1(C(a), C(b), z), 1e-11);
  }
}

TEST_CASE("hyp1f1 trivial cases") {
  CHECK(hyp1f1(C(2.5), C(1.5), C(0)) == C(1));
  check_close(hyp1f1(C(1.75), C(1.75), C(0.3, -0.7)), std::exp(C(0.3, -0.7)), 1e-15);
  CHECK(hyp1f1(C(0), C(3.5), C(4, 1)) == C(1));
  CHECK_THROWS_AS(hyp1f1(C(1), C(-2), C(1)), DomainError);
}

TEST_CASE("hyp1f1 derivative") {
  check_close(hyp1f1_derivative(C(2.5), C(1.5), C(0), 1), C(2.5 / 1.5), 1e-15);
  CHECK(hyp1f1_derivative(C(0), C(1.5), C(2), 1) == C(0));
  const C a(1.25, 0.5), b(2.5, -0.25), z(0.7, -1.1);
  const double h = 1e-5;
  const C fd = (hyp1f1(a, b, z + h) - hyp1f1(a, b, z - h)) / (2 * h);
  check_close(hyp1f1_derivative(a, b, z, 1), fd, 1e-8);
}

TEST_CASE("contiguous relations") {
  CHECK(contiguous_residual(ContiguousRelation::U1, C(1), C(2), C(0)).residual == C(0));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 100; ++i) {
    const C a(u(rng), u(rng)), b(u(rng) + 0.37, u(rng) + 0.5), z(u(rng), u(rng));
    for (auto rel : {ContiguousRelation::U0, ContiguousRelation::U1, ContiguousRelation::U2, ContiguousRelation::U3,
                     ContiguousRelation::U4, ContiguousRelation::Uno, ContiguousRelation::Dos}) {
      CAPTURE(to_string(rel));
      CHECK(contiguous_residual(rel, a, b, z).relative() <= 1e-10);
    }
  }
  const C b(3.25, 0.5), z(1.5, -0.5);
  CHECK(contiguous_residual(ContiguousRelation::Dos, b, b, z).relative() <= 1e-10);
  // The printed variant is not an identity.
  CHECK(contiguous_residual(ContiguousRelation::DosAsPrinted, C(1.5), C(3.25), z).relative() > 1e-6);
  CHECK(contiguous_relation_from_string("Uno") == ContiguousRelation::Uno);
  CHECK_THROWS_AS(contiguous_relation_from_string("U9"), DomainError);
}
