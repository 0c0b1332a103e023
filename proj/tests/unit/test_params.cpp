#include <set>

#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/params.hpp"

using namespace sw;

namespace {

// {l(n+2j) : 1 <= l <= j+1}, or the nonzero triangular numbers for n = 1.
std::set<std::int64_t> brute_force(int n, std::int64_t bound) {
  std::set<std::int64_t> out;
  if (n == 1) {
    for (std::int64_t L = 2; L * (L - 1) / 2 <= bound; ++L) out.insert(L * (L - 1) / 2);
    return out;
  }
  for (std::int64_t j = 0; n + 2 * j <= bound; ++j) {
    for (std::int64_t l = 1; l <= j + 1 && l * (n + 2 * j) <= bound; ++l) out.insert(l * (n + 2 * j));
  }
  return out;
}

}  // namespace

TEST_CASE("closed-form admissibility agrees with enumeration") {
  for (int n = 1; n <= 8; ++n) {
    const auto expected = brute_force(n, 800);
    for (std::int64_t lambda = 0; lambda <= 800; ++lambda) {
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(is_admissible(n, lambda) == (expected.count(lambda) > 0));
    }
  }
}

TEST_CASE("eigenvalue_of_pair") {
  CHECK(eigenvalue_of_pair(3, 5, 2) == 75);
  CHECK(eigenvalue_of_pair(3, 1, 0) == 3);
  CHECK(eigenvalue_of_pair(1, 1, 0) == 0);
}

TEST_CASE("is_admissible examples") {
  CHECK_FALSE(is_admissible(2, std::int64_t{3}));
  CHECK(is_admissible(3, std::int64_t{75}));
  CHECK_FALSE(is_admissible(4, std::int64_t{2}));
  CHECK_FALSE(is_admissible(3, 7.5));
  CHECK(is_admissible(3, 75.0));
}

TEST_CASE("enumerate_admissible") {
  CHECK(enumerate_admissible(4, 10) == std::vector<std::int64_t>{4, 6, 8, 10});
  CHECK(enumerate_admissible(3, 5) == std::vector<std::int64_t>{3, 5});
  CHECK(enumerate_admissible(1, 3) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("admissible_pairs") {
  CHECK(admissible_pairs(3, 75) == std::vector<LkPair>{{5, 2}, {3, 9}, {1, 36}});
  CHECK(admissible_pairs(2, 4) == std::vector<LkPair>{{2, -1}, {1, 1}});
  CHECK(admissible_pairs(3, 3) == std::vector<LkPair>{{1, 0}});
  CHECK_THROWS_AS(admissible_pairs(2, 3), AdmissibilityError);
  // every pair reproduces λ
  for (int n = 1; n <= 6; ++n) {
    for (auto lambda : enumerate_admissible(n, 300)) {
      for (const auto& p : admissible_pairs(n, lambda)) CHECK(eigenvalue_of_pair(n, p.l, p.k) == lambda);
      for (const auto& p : ktype_pairs(n, lambda)) CHECK(ktype_eigenvalue(n, p.l, p.k) == lambda);
    }
  }
}

TEST_CASE("weight_residue") {
  CHECK(weight_residue(ParameterSet::schrodinger(3, 0), 0) == 0);
  CHECK(weight_residue(ParameterSet::schrodinger(3, 3), 2) == 3);
  CHECK(weight_residue(ParameterSet::schrodinger(3, 1), 3) == 3);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ParameterSet::make(3, 0, 0.0), DomainError);
  CHECK_THROWS_AS(ParameterSet::make(0, 0, 1.0), DomainError);
  CHECK(ParameterSet::make(3, -1, 1.0).q() == 3);
  CHECK(ParameterSet::make(3, 6, 1.0).q() == 2);
  CHECK(s_preset("heat") == Complex(-0.25, 0.0));
  CHECK(s_preset("schrodinger") == Complex(0.0, 0.5));
  CHECK_THROWS_AS(s_preset("wave"), DomainError);
  CHECK(ParameterSet::heat(2, 1).r() == -1.0);
}
