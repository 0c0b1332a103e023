#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace sw {

using Complex = std::complex<double>;

/// Representation parameters (n, q, s); r is pinned to -n/2.
class ParameterSet {
 public:
  /// Validates n >= 1 and s != 0; q is reduced into {0,1,2,3}.
  static ParameterSet make(int n, int q, Complex s);

  /// s = i/2, the Schrödinger specialization.
  static ParameterSet schrodinger(int n, int q) { return make(n, q, Complex(0.0, 0.5)); }
  /// s = -1/4, the heat specialization.
  static ParameterSet heat(int n, int q) { return make(n, q, Complex(-0.25, 0.0)); }

  int n() const { return n_; }
  int q() const { return q_; }
  Complex s() const { return s_; }
  /// r = -n/2.
  double r() const { return -0.5 * n_; }

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  ParameterSet(int n, int q, Complex s) : n_(n), q_(q), s_(s) {}
  int n_;
  int q_;
  Complex s_;
};

/// Named s presets accepted by the CLI.
Complex s_preset(const std::string& name);

/// Indices of a K-finite basis vector F_{m,l,k}: κ-weight m/2, radial
/// exponent 2l and harmonic degree k (signed only for n = 2).
struct KTypeIndex {
  int m = 0;
  int l = 0;
  int k = 0;

  friend auto operator<=>(const KTypeIndex&, const KTypeIndex&) = default;
};

struct LkPair {
  std::int64_t l = 0;
  std::int64_t k = 0;

  friend auto operator<=>(const LkPair&, const LkPair&) = default;
};

/// An eigenvalue λ of Ω''/2. Either a member of A_n or the λ = 0 family.
class Eigenvalue {
 public:
  /// Throws AdmissibilityError unless `value` lies in A_n (triangular for n = 1).
  static Eigenvalue admissible(int n, std::int64_t value);
  static Eigenvalue zero() { return Eigenvalue(0); }

  std::int64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend auto operator<=>(const Eigenvalue&, const Eigenvalue&) = default;

 private:
  explicit Eigenvalue(std::int64_t v) : value_(v) {}
  std::int64_t value_;
};

/// l(2l+2k+n-2) for n >= 2, l(l-1)/2 for n = 1 (where k must be 0 and l is
/// the triangular label). l = 0 gives the λ = 0 family.
std::int64_t eigenvalue_of_pair(int n, std::int64_t l, std::int64_t k);

/// l(2l+2k+n-2) in the radial-exponent parametrization, valid for every n
/// including n = 1 with k ∈ {0,1}. This is the value carried by K-types.
std::int64_t ktype_eigenvalue(int n, std::int64_t l, std::int64_t k);

/// Membership in A_n via the closed-form parity/divisibility criteria.
bool is_admissible(int n, std::int64_t lambda);
/// Non-integral λ is never admissible.
bool is_admissible(int n, double lambda);

/// All admissible λ ≤ lambda_max in increasing order.
std::vector<std::int64_t> enumerate_admissible(int n, std::int64_t lambda_max);

/// Every λ-admissible (l,k) with l >= 1, sorted by decreasing l. For n = 1 the
/// single pair is (L,0) with λ = L(L-1)/2. Throws if λ is not admissible.
std::vector<LkPair> admissible_pairs(int n, std::int64_t lambda);

/// The (l,k) indices of the K-types spanning ker(Ω''-2λ). Identical to
/// admissible_pairs for n >= 2; for n = 1 the triangular label L becomes
/// (l,k) = (L div 2, L mod 2).
std::vector<LkPair> ktype_pairs(int n, std::int64_t lambda);

/// Maps the n = 1 triangular label L to radial/harmonic indices.
LkPair triangular_label_to_ktype(std::int64_t L);

/// (q + 2k) mod 4, in {0,1,2,3}.
int weight_residue(const ParameterSet& params, std::int64_t k);

/// Floor-mod into [0, modulus).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t modulus) {
  const std::int64_t r = a % modulus;
  return r < 0 ? r + modulus : r;
}

/// Valid harmonic degrees: k >= 0 for n >= 3, k ∈ {0,1} for n = 1, any k for n = 2.
bool harmonic_degree_valid(int n, std::int64_t k);

}  // namespace sw
