#include "singular_weyl/params.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "singular_weyl/errors.hpp"

namespace sw {

ParameterSet ParameterSet::make(int n, int q, Complex s) {
  if (n < 1) throw DomainError("n must be >= 1 (got " + std::to_string(n) + ")");
  if (s == Complex(0.0, 0.0)) throw DomainError("s must be nonzero");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("s must be finite");
  return ParameterSet(n, static_cast<int>(mod_floor(q, 4)), s);
}

Complex s_preset(const std::string& name) {
  if (name == "schrodinger") return {0.0, 0.5};
  if (name == "heat") return {-0.25, 0.0};
  throw DomainError("unknown s preset '" + name + "' (expected schrodinger or heat)");
}

Eigenvalue Eigenvalue::admissible(int n, std::int64_t value) {
  if (!is_admissible(n, value)) {
    throw AdmissibilityError("lambda = " + std::to_string(value) + " is not admissible for n = " +
                             std::to_string(n));
  }
  return Eigenvalue(value);
}

bool harmonic_degree_valid(int n, std::int64_t k) {
  if (n == 1) return k == 0 || k == 1;
  if (n == 2) return true;
  return k >= 0;
}

std::int64_t eigenvalue_of_pair(int n, std::int64_t l, std::int64_t k) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (l < 0) throw DomainError("l must be >= 0");
  if (n == 1) {
    if (k != 0) throw DomainError("for n = 1 the pair label must have k = 0");
    return l * (l - 1) / 2;
  }
  if (n >= 3 && k < 0) throw DomainError("k must be >= 0 for n >= 3");
  return l * (2 * l + 2 * k + n - 2);
}

std::int64_t ktype_eigenvalue(int n, std::int64_t l, std::int64_t k) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (l < 0) throw DomainError("l must be >= 0");
  if (!harmonic_degree_valid(n, k)) {
    throw DomainError("harmonic degree k = " + std::to_string(k) + " invalid for n = " +
                      std::to_string(n));
  }
  return l * (2 * l + 2 * k + n - 2);
}

namespace {

bool is_triangular_nonzero(std::int64_t lambda) {
  if (lambda <= 0) return false;
  // λ = L(L-1)/2  <=>  8λ + 1 = (2L-1)^2
  const auto disc = static_cast<std::uint64_t>(8 * lambda + 1);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(disc)));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return root * root == disc;
}

std::int64_t triangular_label(std::int64_t lambda) {
  const auto disc = static_cast<std::uint64_t>(8 * lambda + 1);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(disc)));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return static_cast<std::int64_t>((root + 1) / 2);
}

}  // namespace

bool is_admissible(int n, std::int64_t lambda) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (lambda <= 0) return false;
  if (n == 1) return is_triangular_nonzero(lambda);
  if (n % 2 == 0) return lambda % 2 == 0 && lambda >= n;
  // Odd n: λ = 2^r a with a odd must satisfy a >= n + 2^{r+1} - 2.
  const auto u = static_cast<std::uint64_t>(lambda);
  const int r = std::countr_zero(u);
  const std::uint64_t a = u >> r;
  if (r + 1 >= 63) return false;
  const __int128 bound = static_cast<__int128>(n) + (static_cast<__int128>(1) << (r + 1)) - 2;
  return static_cast<__int128>(a) >= bound;
}

bool is_admissible(int n, double lambda) {
  if (!std::isfinite(lambda) || lambda != std::floor(lambda)) return false;
  if (std::abs(lambda) > 9.0e15) return false;
  return is_admissible(n, static_cast<std::int64_t>(lambda));
}

std::vector<std::int64_t> enumerate_admissible(int n, std::int64_t lambda_max) {
  if (lambda_max < 0) throw DomainError("lambda_max must be >= 0");
  std::vector<std::int64_t> out;
  for (std::int64_t lambda = 1; lambda <= lambda_max; ++lambda) {
    if (is_admissible(n, lambda)) out.push_back(lambda);
  }
  return out;
}

std::vector<LkPair> admissible_pairs(int n, std::int64_t lambda) {
  if (!is_admissible(n, lambda)) {
    throw AdmissibilityError("lambda = " + std::to_string(lambda) +
                             " is not admissible for n = " + std::to_string(n));
  }
  std::vector<LkPair> pairs;
  if (n == 1) {
    pairs.push_back({triangular_label(lambda), 0});
    return pairs;
  }
  // λ = l(2l + 2k + n - 2): l divides λ and k = (λ/l - 2l - n + 2)/2.
  // For n >= 3, k >= 0 bounds l by l(2l + n - 2) <= λ. For n = 2 any divisor
  // l of λ/2 works (k may go negative).
  const auto in_range = [&](std::int64_t l) {
    return n == 2 ? l <= lambda / 2 : l * (2 * l + n - 2) <= lambda;
  };
  for (std::int64_t l = 1; in_range(l); ++l) {
    if (lambda % l != 0) continue;
    const std::int64_t numerator = lambda / l - 2 * l - n + 2;
    if (numerator % 2 != 0) continue;
    pairs.push_back({l, numerator / 2});
  }
  std::sort(pairs.begin(), pairs.end(), [](const LkPair& x, const LkPair& y) { return x.l > y.l; });
  return pairs;
}

LkPair triangular_label_to_ktype(std::int64_t L) {
  if (L < 0) throw DomainError("triangular label must be >= 0");
  return {L / 2, L % 2};
}

std::vector<LkPair> ktype_pairs(int n, std::int64_t lambda) {
  auto pairs = admissible_pairs(n, lambda);
  if (n == 1) {
    for (auto& p : pairs) p = triangular_label_to_ktype(p.l);
  }
  return pairs;
}

int weight_residue(const ParameterSet& params, std::int64_t k) {
  return static_cast<int>(mod_floor(params.q() + 2 * k, 4));
}

}  // namespace sw
