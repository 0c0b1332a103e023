#pragma once

#include <cstdint>
#include <vector>

#include "singular_weyl/polynomial.hpp"
#include "singular_weyl/rational.hpp"

namespace sw {

/// An element of ℋ_|k|(ℝⁿ): homogeneous of degree |k| with zero Laplacian.
/// The signed index k is only meaningful for n = 2, where negative k marks
/// the (y1 - i y2)^{|k|} family. The zero polynomial is allowed (it shows up
/// as a legitimate output of decompose_yj).
class HarmonicPolynomial {
 public:
  /// Verifies homogeneity and exact harmonicity; throws DomainError otherwise.
  HarmonicPolynomial(Polynomial p, int k);

  const Polynomial& polynomial() const { return poly_; }
  int k() const { return k_; }
  int degree() const { return k_ < 0 ? -k_ : k_; }
  int dimension() const { return poly_.dimension(); }
  bool is_zero() const { return poly_.is_zero(); }
  /// Built by zonal_harmonic, so it can be evaluated by recurrence.
  bool is_zonal() const { return zonal_; }

  friend bool operator==(const HarmonicPolynomial& a, const HarmonicPolynomial& b) {
    return a.k_ == b.k_ && a.poly_ == b.poly_;
  }

 private:
  friend HarmonicPolynomial zonal_harmonic(int n, int k);

  Polynomial poly_;
  int k_;
  bool zonal_ = false;
};

/// Value of zonal_harmonic(n, k) at y by the normalized Gegenbauer
/// recurrence Q_{m+1} = y1 Q_m - m(m+2α-1)/(4(α+m)(α+m-1)) ρ² Q_{m-1},
/// α = (n-2)/2. O(k) and free of the cancellation of the monomial form.
double zonal_value(int n, int k, const double* y);

/// dim ℋ_k(ℝⁿ) = C(n+k-1, k) - C(n+k-3, k-2).
std::int64_t harmonic_dimension(int n, int k);

/// Exact basis of ℋ_k(ℝⁿ) from the kernel of the Laplacian on degree-k
/// monomials. Elements are monic in their graded-lex leading monomial and
/// listed in ascending graded-lex order of that monomial.
std::vector<HarmonicPolynomial> harmonic_basis(int n, int k);

/// (y1 + i y2)^k for k >= 0, (y1 - i y2)^{|k|} for k < 0; n = 2 only.
HarmonicPolynomial signed_harmonic(int k);

/// A convenient nonzero element of ℋ_k(ℝⁿ): (y1 + i y2)^k for n = 2, the
/// zonal harmonic about y1 for n >= 3 and k >= 2, the top basis element
/// otherwise. Never needs the full basis, so large k stays cheap.
HarmonicPolynomial representative_harmonic(int n, int k);

/// The zonal (Gegenbauer) harmonic Σ_j c_j y1^{k-2j} ρ^{2j}, c_0 = 1; n >= 3.
HarmonicPolynomial zonal_harmonic(int n, int k);

/// c_{k,n} = 1/(2k+n-2), with c_{0,2} = 0.
Rational c_const(int k, int n);

struct YjDecomposition {
  HarmonicPolynomial h_next;  ///< h_{k+1,j} = y_j h - c ρ² ∂_j h, possibly zero
  Rational c;                 ///< c_{k,n}
};

/// Splits y_j h into a harmonic part of degree k+1 plus c_{k,n} ρ² ∂_j h.
/// Throws InternalConsistencyError if the harmonic part is not exactly harmonic.
YjDecomposition decompose_yj(const HarmonicPolynomial& h, int j);

/// Coordinates of h in harmonic_basis(n, k). Throws if h is not in the span.
std::vector<GaussianRational> harmonic_coordinates(const HarmonicPolynomial& h);

}  // namespace sw
